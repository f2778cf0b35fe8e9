#include "streamgraph/stream_graph.hpp"

#include "streamgraph/error.hpp"

#include <algorithm>

namespace sg {

std::string_view to_string(Kind kind) {
    switch (kind) {
        case Kind::undirected: return "undirected";
        case Kind::bipartite: return "bipartite";
        case Kind::directed: return "directed";
    }
    return "?";
}

std::string_view to_string(Side side) { return side == Side::top ? "top" : "bottom"; }

std::optional<Kind> parse_kind(std::string_view text) {
    if (text == "undirected") return Kind::undirected;
    if (text == "bipartite") return Kind::bipartite;
    if (text == "directed") return Kind::directed;
    return std::nullopt;
}

std::optional<Side> parse_side(std::string_view text) {
    if (text == "top") return Side::top;
    if (text == "bottom") return Side::bottom;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// StreamGraph

bool StreamGraph::has_node_weights() const {
    return std::any_of(node_weights_.begin(), node_weights_.end(), [](const auto& w) { return w.has_value(); });
}

NodeIndex StreamGraph::index(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw Error(ErrorCode::unknown_node, "unknown node '" + std::string(name) + "'");
}

std::optional<NodeIndex> StreamGraph::find(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<NodeIndex>(it - names_.begin());
}

const StepWeight* StreamGraph::node_weight(NodeIndex v) const {
    return node_weights_[v] ? &*node_weights_[v] : nullptr;
}

bool operator==(const StreamGraph& a, const StreamGraph& b) {
    return a.kind_ == b.kind_ && a.horizon_ == b.horizon_ && a.weighted_ == b.weighted_ && a.names_ == b.names_ &&
           a.presence_ == b.presence_ && a.sides_ == b.sides_ && a.node_weights_ == b.node_weights_ &&
           a.links_ == b.links_;
}

const Link* StreamGraph::find_link(NodeIndex u, NodeIndex v) const {
    if (kind_ != Kind::directed && v < u) std::swap(u, v);
    auto it = link_index_.find({u, v});
    return it == link_index_.end() ? nullptr : &links_[it->second];
}

const IntervalSet& StreamGraph::link_presence(NodeIndex u, NodeIndex v) const {
    static const IntervalSet empty;
    const Link* l = find_link(u, v);
    return l ? l->presence : empty;
}

// ---------------------------------------------------------------------------
// StreamBuilder

StreamBuilder::StreamBuilder(Kind kind, Interval horizon) : kind_(kind), horizon_(std::move(horizon)) {
    if (horizon_.end < horizon_.begin) throw Error(ErrorCode::reversed_interval, "reversed time horizon");
}

StreamBuilder::NodeDecl& StreamBuilder::node(std::string_view name, int line) {
    if (name.empty()) throw Error(ErrorCode::syntax, "empty node name", line);
    auto it = nodes_.find(name);
    if (it == nodes_.end()) {
        it = nodes_.emplace(std::string(name), NodeDecl{}).first;
        it->second.line = line;
    }
    return it->second;
}

void StreamBuilder::add_node(std::string_view name, int line) { node(name, line); }

void StreamBuilder::add_presence(std::string_view name, const Interval& interval, int line) {
    if (interval.end < interval.begin)
        throw Error(ErrorCode::reversed_interval, "reversed presence interval for '" + std::string(name) + "'", line);
    auto& n = node(name, line);
    n.presence.push_back(interval);
    if (n.line == 0) n.line = line;
}

void StreamBuilder::add_presence(std::string_view name, const IntervalSet& set, int line) {
    auto& n = node(name, line);
    n.presence.insert(n.presence.end(), set.begin(), set.end());
}

void StreamBuilder::set_side(std::string_view name, Side side, int line) {
    if (kind_ != Kind::bipartite)
        throw Error(ErrorCode::kind_mismatch, "sides require a bipartite stream", line);
    auto& n = node(name, line);
    if (n.side && *n.side != side)
        throw Error(ErrorCode::side_violation, "node '" + std::string(name) + "' given two sides", line);
    n.side = side;
    n.side_line = line;
}

bool StreamBuilder::has_side(std::string_view name) const {
    auto it = nodes_.find(name);
    return it != nodes_.end() && it->second.side.has_value();
}

bool StreamBuilder::declared(std::string_view name) const { return nodes_.find(name) != nodes_.end(); }

void StreamBuilder::add_link(std::string_view u, std::string_view v, const Interval& interval,
                             std::optional<Rational> weight, int line) {
    if (interval.end < interval.begin)
        throw Error(ErrorCode::reversed_interval,
                    "reversed link interval for " + std::string(u) + "-" + std::string(v), line);
    if (u == v && kind_ != Kind::directed)
        throw Error(ErrorCode::self_loop, "self-loop " + std::string(u) + "-" + std::string(v) +
                                              " only allowed in directed streams", line);
    node(u, line);
    node(v, line);
    std::pair<std::string, std::string> key{std::string(u), std::string(v)};
    if (kind_ != Kind::directed && key.second < key.first) std::swap(key.first, key.second);
    auto& decl = links_[key];
    if (decl.line == 0) decl.line = line;
    if (weight) weighted_ = true;
    decl.pieces.push_back({interval, weight.value_or(Rational(1))});
}

void StreamBuilder::add_link(std::string_view u, std::string_view v, const IntervalSet& set, int line) {
    for (const auto& iv : set) add_link(u, v, iv, std::nullopt, line);
    if (set.empty()) {
        node(u, line);
        node(v, line);
    }
}

void StreamBuilder::add_node_weight(std::string_view name, const Interval& interval, const Rational& weight,
                                    int line) {
    if (interval.end < interval.begin)
        throw Error(ErrorCode::reversed_interval, "reversed node weight interval", line);
    auto& n = node(name, line);
    n.weights.push_back({interval, weight});
    if (n.weight_line == 0) n.weight_line = line;
    weighted_ = true;
}

StreamGraph StreamBuilder::build() const {
    StreamGraph g;
    g.kind_ = kind_;
    g.horizon_ = horizon_;
    g.weighted_ = weighted_;

    const IntervalSet horizon_set = IntervalSet::normalize({horizon_});
    for (const auto& [name, decl] : nodes_) {
        IntervalSet presence = IntervalSet::normalize(decl.presence);
        if (!presence.is_subset_of(horizon_set))
            throw Error(ErrorCode::containment,
                        "presence of '" + name + "' " + presence.to_string() + " leaves the horizon", decl.line);
        if (kind_ == Kind::bipartite && !decl.side)
            throw Error(ErrorCode::side_violation, "node '" + name + "' has no side", decl.line);
        std::optional<StepWeight> weight;
        if (!decl.weights.empty()) {
            StepWeight w;
            try {
                w = StepWeight::from_pieces(decl.weights);
            } catch (const Error& e) {
                throw Error(e.code(), "node '" + name + "': " + e.what(), decl.weight_line);
            }
            if (w.support() != presence)
                throw Error(ErrorCode::weight_support,
                            "weights of '" + name + "' cover " + w.support().to_string() + " but presence is " +
                                presence.to_string(),
                            decl.weight_line);
            weight = std::move(w);
        }
        g.names_.push_back(name);
        g.presence_.push_back(std::move(presence));
        g.sides_.push_back(decl.side);
        g.node_weights_.push_back(std::move(weight));
    }

    const std::size_t n = g.names_.size();
    g.out_.resize(n);
    g.in_.resize(n);

    for (const auto& [key, decl] : links_) {
        const NodeIndex u = g.index(key.first);
        const NodeIndex v = g.index(key.second);
        const std::string label = key.first + (kind_ == Kind::directed ? "->" : "-") + key.second;
        if (kind_ == Kind::bipartite && g.sides_[u] == g.sides_[v])
            throw Error(ErrorCode::side_violation, "link " + label + " joins two " +
                                                       std::string(to_string(*g.sides_[u])) + " nodes",
                        decl.line);
        StepWeight weight;
        try {
            weight = StepWeight::from_pieces(decl.pieces);
        } catch (const Error& e) {
            throw Error(e.code(), "link " + label + ": " + e.what(), decl.line);
        }
        IntervalSet presence = weight.support();
        if (!presence.is_subset_of(intersect(g.presence_[u], g.presence_[v])))
            throw Error(ErrorCode::containment,
                        "link " + label + " present at " + presence.to_string() +
                            " outside its endpoints' common presence",
                        decl.line);
        if (presence.empty()) continue;
        const std::size_t id = g.links_.size();
        g.links_.push_back(Link{u, v, std::move(presence), std::move(weight)});
        g.link_index_.emplace(std::make_pair(u, v), id);
        if (kind_ == Kind::directed) {
            g.out_[u].push_back({v, id});
            g.in_[v].push_back({u, id});
        } else {
            g.out_[u].push_back({v, id});
            g.out_[v].push_back({u, id});
        }
    }
    if (kind_ != Kind::directed) g.in_ = g.out_;
    for (auto* adj : {&g.out_, &g.in_})
        for (auto& list : *adj)
            std::sort(list.begin(), list.end(), [](const Incidence& a, const Incidence& b) { return a.node < b.node; });
    return g;
}

}  // namespace sg
