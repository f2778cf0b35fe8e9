#pragma once

#include "streamgraph/interval_set.hpp"
#include "streamgraph/step_weight.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sg {

enum class Kind { undirected, bipartite, directed };
enum class Side { top, bottom };

std::string_view to_string(Kind kind);
std::string_view to_string(Side side);
std::optional<Kind> parse_kind(std::string_view text);
std::optional<Side> parse_side(std::string_view text);

using NodeIndex = std::size_t;

/// Node-id → presence set; used for neighborhoods and clique candidates.
using NodeSets = std::map<std::string, IntervalSet, std::less<>>;

/// One temporal link. For undirected and bipartite streams `from < to`
/// (by node index); for directed streams it is the arc from → to.
struct Link {
    NodeIndex from;
    NodeIndex to;
    IntervalSet presence;
    StepWeight weight;  // constant 1 on `presence` when the stream is unweighted

    friend bool operator==(const Link&, const Link&) = default;
};

/// Adjacency entry: the other endpoint and the link it goes through.
struct Incidence {
    NodeIndex node;
    std::size_t link;
};

/// Immutable stream graph S = (T, V, W, E), optionally weighted, bipartite
/// (sides) or directed. Construct through StreamBuilder.
class StreamGraph {
public:
    Kind kind() const { return kind_; }
    bool directed() const { return kind_ == Kind::directed; }
    bool weighted() const { return weighted_; }
    bool has_node_weights() const;

    const Interval& horizon() const { return horizon_; }
    Rational duration() const { return horizon_.length(); }

    std::size_t node_total() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(NodeIndex v) const { return names_[v]; }
    /// Throws Error(unknown_node).
    NodeIndex index(std::string_view name) const;
    std::optional<NodeIndex> find(std::string_view name) const;

    const IntervalSet& presence(NodeIndex v) const { return presence_[v]; }
    std::optional<Side> side(NodeIndex v) const { return sides_[v]; }
    const StepWeight* node_weight(NodeIndex v) const;

    const std::vector<Link>& links() const { return links_; }

    /// The link u–v (or arc u→v when directed), or nullptr when never present.
    const Link* find_link(NodeIndex u, NodeIndex v) const;
    /// Presence of u–v (arc u→v when directed); empty when absent.
    const IntervalSet& link_presence(NodeIndex u, NodeIndex v) const;

    /// Undirected neighbors (all incident links). For directed streams this is
    /// the out-adjacency.
    const std::vector<Incidence>& neighbors(NodeIndex v) const { return out_[v]; }
    const std::vector<Incidence>& out_arcs(NodeIndex v) const { return out_[v]; }
    const std::vector<Incidence>& in_arcs(NodeIndex v) const { return in_[v]; }

    /// Same kind, horizon, nodes, sides, presence sets, links and weights.
    friend bool operator==(const StreamGraph& a, const StreamGraph& b);

private:
    friend class StreamBuilder;

    Kind kind_ = Kind::undirected;
    Interval horizon_;
    bool weighted_ = false;
    std::vector<std::string> names_;
    std::vector<IntervalSet> presence_;
    std::vector<std::optional<Side>> sides_;
    std::vector<std::optional<StepWeight>> node_weights_;
    std::vector<Link> links_;
    std::map<std::pair<NodeIndex, NodeIndex>, std::size_t> link_index_;
    std::vector<std::vector<Incidence>> out_;
    std::vector<std::vector<Incidence>> in_;
};

/// Accumulates declarations and validates them into a StreamGraph.
///
/// Repeated presence declarations are united. Every declaration may carry a
/// source line, which is attached to validation errors raised by build().
class StreamBuilder {
public:
    StreamBuilder(Kind kind, Interval horizon);

    Kind kind() const { return kind_; }

    void add_node(std::string_view name, int line = 0);
    void add_presence(std::string_view name, const Interval& interval, int line = 0);
    void add_presence(std::string_view name, const IntervalSet& set, int line = 0);
    void set_side(std::string_view name, Side side, int line = 0);
    bool has_side(std::string_view name) const;
    bool declared(std::string_view name) const;

    /// Link u–v (arc u→v when directed). A missing weight means 1; any
    /// explicit weight makes the whole stream weighted.
    void add_link(std::string_view u, std::string_view v, const Interval& interval,
                  std::optional<Rational> weight = std::nullopt, int line = 0);
    void add_link(std::string_view u, std::string_view v, const IntervalSet& set, int line = 0);
    void add_node_weight(std::string_view name, const Interval& interval, const Rational& weight, int line = 0);

    /// Forces the weighted flag even when every weight is 1.
    void mark_weighted() { weighted_ = true; }

    /// Throws Error with the offending declaration's line on any invariant violation.
    StreamGraph build() const;

private:
    struct NodeDecl {
        std::vector<Interval> presence;
        std::optional<Side> side;
        std::vector<WeightPiece> weights;
        int line = 0;
        int side_line = 0;
        int weight_line = 0;
    };
    struct LinkDecl {
        std::vector<WeightPiece> pieces;
        int line = 0;
    };

    NodeDecl& node(std::string_view name, int line);

    Kind kind_;
    Interval horizon_;
    bool weighted_ = false;
    std::map<std::string, NodeDecl, std::less<>> nodes_;
    std::map<std::pair<std::string, std::string>, LinkDecl> links_;
};

}  // namespace sg
