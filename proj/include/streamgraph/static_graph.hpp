#pragma once

#include "streamgraph/rational.hpp"
#include "streamgraph/stream_graph.hpp"
#include "streamgraph/value.hpp"
#include "streamgraph/variants.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace sg {

struct GraphNode {
    std::string name;
    std::optional<Side> side;
    std::optional<Rational> weight;
};

struct GraphEdge {
    std::string from;
    std::string to;
    Rational weight{1};
    // Extremal weights over time, set by weighted_induced_graph.
    std::optional<Rational> min_weight;
    std::optional<Rational> max_weight;

    friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

/// Classical graph, optionally weighted, bipartite or directed. Edges of
/// undirected kinds are stored with from < to.
class StaticGraph {
public:
    StaticGraph() = default;
    StaticGraph(Kind kind, std::vector<GraphNode> nodes, std::vector<GraphEdge> edges, bool weighted = false);

    Kind kind() const { return kind_; }
    bool directed() const { return kind_ == Kind::directed; }
    bool weighted() const { return weighted_; }

    std::size_t node_total() const { return nodes_.size(); }
    std::size_t edge_total() const { return edges_.size(); }
    const std::vector<GraphNode>& nodes() const { return nodes_; }
    const std::string& name(NodeIndex v) const { return nodes_[v].name; }
    std::optional<NodeIndex> find(std::string_view name) const;
    NodeIndex index(std::string_view name) const;
    std::optional<Side> side(NodeIndex v) const { return nodes_[v].side; }

    /// Edge u–v (arc u→v when directed).
    bool has_edge(NodeIndex u, NodeIndex v) const;
    /// Weight of u–v, 1 for unweighted graphs; nullopt when absent.
    std::optional<Rational> weight(NodeIndex u, NodeIndex v) const;

    /// Neighbors (undirected) or out-neighbors (directed), sorted.
    const std::vector<NodeIndex>& out(NodeIndex v) const { return out_[v]; }
    const std::vector<NodeIndex>& in(NodeIndex v) const { return in_[v]; }

    std::vector<GraphEdge> edges() const;

    friend bool operator==(const StaticGraph& a, const StaticGraph& b);

private:
    Kind kind_ = Kind::undirected;
    bool weighted_ = false;
    std::vector<GraphNode> nodes_;
    std::map<std::pair<NodeIndex, NodeIndex>, GraphEdge> edges_;
    std::vector<std::vector<NodeIndex>> out_;
    std::vector<std::vector<NodeIndex>> in_;
};

/// G_t with closed-interval membership; weights evaluated at t when S is
/// weighted (left piece owns shared endpoints). Throws if t ∉ T.
StaticGraph snapshot(const StreamGraph& s, const Rational& t);
inline StaticGraph weighted_snapshot(const StreamGraph& s, const Rational& t) { return snapshot(s, t); }

/// G(S): nodes and links present at some time. Unweighted.
StaticGraph induced_graph(const StreamGraph& s);

/// G(S) weighted by time-averaged weights (1/|T|)∫ω, annotated with the
/// minimal and maximal link weights over time.
StaticGraph weighted_induced_graph(const StreamGraph& s);

/// Graph built directly from a stream's declarations at a single instant
/// is a snapshot; this builds the graph-equivalent stream of `g` over `horizon`.
StreamGraph as_stream(const StaticGraph& g, const Interval& horizon);

namespace graph {

// Direct counting implementations of the classical metrics. They share no
// code with the interval algebra so they can serve as a consistency oracle.

Rational node_count(const StaticGraph& g);
Rational edge_count(const StaticGraph& g);
Rational degree(const StaticGraph& g, NodeIndex v);
Metric average_degree(const StaticGraph& g);
Metric density(const StaticGraph& g);
Metric clustering(const StaticGraph& g, NodeIndex v);
Metric transitivity(const StaticGraph& g);
bool is_clique(const StaticGraph& g, const std::set<NodeIndex>& c);

Rational strength(const StaticGraph& g, NodeIndex v);
Metric weighted_density(const StaticGraph& g, DensityVariant variant);
Metric barrat_clustering(const StaticGraph& g, NodeIndex v);
Outcome weighted_clustering(const StaticGraph& g, NodeIndex v, ValueFn fn);
Outcome weighted_transitivity(const StaticGraph& g, ValueFn fn);

Rational side_count(const StaticGraph& g, Side side);
Metric side_average_degree(const StaticGraph& g, Side side);
Metric bipartite_density(const StaticGraph& g);
Metric jaccard(const StaticGraph& g, NodeIndex u, NodeIndex v);
Metric jaccard_clustering(const StaticGraph& g, NodeIndex v);
Metric redundancy(const StaticGraph& g, NodeIndex v);
Metric cc_star(const StaticGraph& g, NodeIndex v);
Metric bipartite_transitivity(const StaticGraph& g, BipartiteTransitivity variant);
StaticGraph project(const StaticGraph& g, Side side, bool weighted);

Rational out_degree(const StaticGraph& g, NodeIndex v);
Rational in_degree(const StaticGraph& g, NodeIndex v);
Metric directed_density(const StaticGraph& g);
Metric symmetric_fraction(const StaticGraph& g);
Metric loop_fraction(const StaticGraph& g);
Metric directed_clustering(const StaticGraph& g, NodeIndex v, DirectedVariant variant);
Metric directed_transitivity(const StaticGraph& g, DirectedVariant variant);
bool is_directed_clique(const StaticGraph& g, const std::set<NodeIndex>& c);
StaticGraph undirect(const StaticGraph& g);

/// Value of an open triplet from its two center-adjacent weights.
Value pair_value(ValueFn fn, const Rational& a, const Rational& b);

// Raw closed/open counts behind the ratio metrics. The grid oracle sums these
// over snapshots, weighted by cell length.
struct Tally {
    Rational closed;
    Rational open;
};

struct WeightedTally {
    MixedSum closed;
    MixedSum open;
};

Tally clustering_tally(const StaticGraph& g, NodeIndex v);
void weighted_tally(const StaticGraph& g, NodeIndex v, ValueFn fn, WeightedTally& out);
/// Σ over unordered closed neighbor pairs {i,j} of ω_vi + ω_vj.
Rational barrat_sum(const StaticGraph& g, NodeIndex v);
Tally jaccard_tally(const StaticGraph& g, NodeIndex u, NodeIndex v);
Tally redundancy_tally(const StaticGraph& g, NodeIndex v);
Tally cc_star_tally(const StaticGraph& g, NodeIndex v);
Tally bipartite_transitivity_tally(const StaticGraph& g, BipartiteTransitivity variant);
/// cyclic/transitive: closed and open two-paths through v. in/out: arcs
/// between distinct in- (out-) neighbors of v, over ordered distinct pairs.
Tally directed_tally(const StaticGraph& g, NodeIndex v, DirectedVariant variant);

}  // namespace graph

}  // namespace sg
