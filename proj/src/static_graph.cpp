#include "streamgraph/static_graph.hpp"

#include "streamgraph/error.hpp"

#include <algorithm>
#include <cmath>

namespace sg {

StaticGraph::StaticGraph(Kind kind, std::vector<GraphNode> nodes, std::vector<GraphEdge> edges, bool weighted)
    : kind_(kind), weighted_(weighted), nodes_(std::move(nodes)) {
    std::sort(nodes_.begin(), nodes_.end(), [](const GraphNode& a, const GraphNode& b) { return a.name < b.name; });
    for (std::size_t i = 1; i < nodes_.size(); ++i)
        if (nodes_[i].name == nodes_[i - 1].name)
            throw Error(ErrorCode::duplicate_node, "duplicate node '" + nodes_[i].name + "'");
    if (kind_ == Kind::bipartite)
        for (const auto& n : nodes_)
            if (!n.side) throw Error(ErrorCode::side_violation, "node '" + n.name + "' has no side");

    out_.resize(nodes_.size());
    in_.resize(nodes_.size());
    for (auto& e : edges) {
        NodeIndex u = index(e.from);
        NodeIndex v = index(e.to);
        if (kind_ != Kind::directed) {
            if (u == v) throw Error(ErrorCode::self_loop, "self-loop on '" + e.from + "'");
            if (v < u) {
                std::swap(u, v);
                std::swap(e.from, e.to);
            }
        }
        if (kind_ == Kind::bipartite && nodes_[u].side == nodes_[v].side)
            throw Error(ErrorCode::side_violation, "edge " + e.from + "-" + e.to + " within one side");
        edges_.insert_or_assign({u, v}, std::move(e));
    }
    for (const auto& [key, e] : edges_) {
        out_[key.first].push_back(key.second);
        in_[key.second].push_back(key.first);
        if (kind_ != Kind::directed) {
            out_[key.second].push_back(key.first);
            in_[key.first].push_back(key.second);
        }
    }
    for (auto* adj : {&out_, &in_})
        for (auto& list : *adj) std::sort(list.begin(), list.end());
}

std::optional<NodeIndex> StaticGraph::find(std::string_view name) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name,
                               [](const GraphNode& n, std::string_view x) { return n.name < x; });
    if (it == nodes_.end() || it->name != name) return std::nullopt;
    return static_cast<NodeIndex>(it - nodes_.begin());
}

NodeIndex StaticGraph::index(std::string_view name) const {
    if (auto v = find(name)) return *v;
    throw Error(ErrorCode::unknown_node, "unknown node '" + std::string(name) + "'");
}

bool StaticGraph::has_edge(NodeIndex u, NodeIndex v) const {
    if (kind_ != Kind::directed && v < u) std::swap(u, v);
    return edges_.count({u, v}) != 0;
}

std::optional<Rational> StaticGraph::weight(NodeIndex u, NodeIndex v) const {
    if (kind_ != Kind::directed && v < u) std::swap(u, v);
    auto it = edges_.find({u, v});
    if (it == edges_.end()) return std::nullopt;
    return weighted_ ? it->second.weight : Rational(1);
}

std::vector<GraphEdge> StaticGraph::edges() const {
    std::vector<GraphEdge> out;
    out.reserve(edges_.size());
    for (const auto& [key, e] : edges_) out.push_back(e);
    return out;
}

bool operator==(const StaticGraph& a, const StaticGraph& b) {
    if (a.kind_ != b.kind_ || a.weighted_ != b.weighted_ || a.nodes_.size() != b.nodes_.size()) return false;
    for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
        const auto& x = a.nodes_[i];
        const auto& y = b.nodes_[i];
        if (x.name != y.name || x.side != y.side || x.weight != y.weight) return false;
    }
    return a.edges_ == b.edges_;
}

// ---------------------------------------------------------------------------
// Stream → graph

StaticGraph snapshot(const StreamGraph& s, const Rational& t) {
    if (!s.horizon().contains(t))
        throw Error(ErrorCode::invalid_argument, "snapshot time " + t.to_string() + " outside the horizon");
    std::vector<GraphNode> nodes;
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        if (!s.presence(v).contains(t)) continue;
        GraphNode n{s.name(v), s.side(v), std::nullopt};
        if (const StepWeight* w = s.node_weight(v)) n.weight = w->value_at(t);
        nodes.push_back(std::move(n));
    }
    std::vector<GraphEdge> edges;
    for (const auto& l : s.links()) {
        if (!l.presence.contains(t)) continue;
        GraphEdge e{s.name(l.from), s.name(l.to)};
        if (s.weighted()) e.weight = l.weight.value_at(t).value_or(Rational(1));
        edges.push_back(std::move(e));
    }
    return StaticGraph(s.kind(), std::move(nodes), std::move(edges), s.weighted());
}

StaticGraph induced_graph(const StreamGraph& s) {
    std::vector<GraphNode> nodes;
    for (NodeIndex v = 0; v < s.node_total(); ++v)
        if (!s.presence(v).empty()) nodes.push_back({s.name(v), s.side(v), std::nullopt});
    std::vector<GraphEdge> edges;
    for (const auto& l : s.links()) edges.push_back({s.name(l.from), s.name(l.to)});
    return StaticGraph(s.kind(), std::move(nodes), std::move(edges), false);
}

StaticGraph weighted_induced_graph(const StreamGraph& s) {
    const Rational t = s.duration();
    if (t.is_zero()) throw Error(ErrorCode::undefined_horizon, "time horizon has zero length");
    std::vector<GraphNode> nodes;
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        if (s.presence(v).empty()) continue;
        GraphNode n{s.name(v), s.side(v), std::nullopt};
        if (const StepWeight* w = s.node_weight(v)) n.weight = w->integrate() / t;
        nodes.push_back(std::move(n));
    }
    std::vector<GraphEdge> edges;
    for (const auto& l : s.links()) {
        GraphEdge e{s.name(l.from), s.name(l.to), l.weight.integrate() / t};
        e.min_weight = l.weight.min_value();
        e.max_weight = l.weight.max_value();
        edges.push_back(std::move(e));
    }
    return StaticGraph(s.kind(), std::move(nodes), std::move(edges), true);
}

StreamGraph as_stream(const StaticGraph& g, const Interval& horizon) {
    StreamBuilder b(g.kind(), horizon);
    for (const auto& n : g.nodes()) {
        b.add_presence(n.name, horizon);
        if (n.side) b.set_side(n.name, *n.side);
        if (n.weight) b.add_node_weight(n.name, horizon, *n.weight);
    }
    for (const auto& e : g.edges())
        b.add_link(e.from, e.to, horizon, g.weighted() ? std::optional<Rational>(e.weight) : std::nullopt);
    if (g.weighted()) b.mark_weighted();
    return b.build();
}

// ---------------------------------------------------------------------------
// Graph metrics

namespace graph {

namespace {

Rational choose2(std::size_t n) { return n < 2 ? Rational(0) : Rational(static_cast<std::int64_t>(n * (n - 1) / 2)); }
Rational count(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

Metric ratio_of(const Tally& t) { return ratio(t.closed, t.open); }

bool adjacent_to_both(const StaticGraph& g, NodeIndex a, NodeIndex d, std::initializer_list<NodeIndex> excluded) {
    for (NodeIndex x : g.out(a)) {
        if (std::find(excluded.begin(), excluded.end(), x) != excluded.end()) continue;
        if (g.has_edge(x, d)) return true;
    }
    return false;
}

std::size_t common_neighbors(const StaticGraph& g, NodeIndex u, NodeIndex v) {
    std::size_t c = 0;
    for (NodeIndex w : g.out(u))
        if (std::binary_search(g.out(v).begin(), g.out(v).end(), w)) ++c;
    return c;
}

}  // namespace

Value pair_value(ValueFn fn, const Rational& a, const Rational& b) {
    switch (fn) {
        case ValueFn::arith_mean: return Value::of((a + b) / Rational(2));
        case ValueFn::min: return Value::of(min(a, b));
        case ValueFn::max: return Value::of(max(a, b));
        case ValueFn::product: return Value::of(a * b);
        case ValueFn::geo_mean: {
            const Rational p = a * b;
            if (auto r = p.exact_sqrt()) return Value::of(*r);
            return Value::inexact(std::sqrt(p.to_double()));
        }
    }
    return Value::of(Rational(0));
}

Rational node_count(const StaticGraph& g) { return count(g.node_total()); }
Rational edge_count(const StaticGraph& g) { return count(g.edge_total()); }
Rational degree(const StaticGraph& g, NodeIndex v) { return count(g.out(v).size()); }

Metric average_degree(const StaticGraph& g) {
    std::size_t total = 0;
    for (NodeIndex v = 0; v < g.node_total(); ++v) total += g.out(v).size();
    return ratio(count(total), count(g.node_total()));
}

Metric density(const StaticGraph& g) { return ratio(edge_count(g), choose2(g.node_total())); }

Tally clustering_tally(const StaticGraph& g, NodeIndex v) {
    std::size_t open = 0, closed = 0;
    const auto& nb = g.out(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            ++open;
            if (g.has_edge(nb[i], nb[j])) ++closed;
        }
    return {count(closed), count(open)};
}

Metric clustering(const StaticGraph& g, NodeIndex v) { return ratio_of(clustering_tally(g, v)); }

Metric transitivity(const StaticGraph& g) {
    Tally sum;
    for (NodeIndex v = 0; v < g.node_total(); ++v) {
        const Tally t = clustering_tally(g, v);
        sum.closed += t.closed;
        sum.open += t.open;
    }
    return ratio_of(sum);
}

bool is_clique(const StaticGraph& g, const std::set<NodeIndex>& c) {
    for (auto i = c.begin(); i != c.end(); ++i)
        for (auto j = std::next(i); j != c.end(); ++j)
            if (!g.has_edge(*i, *j)) return false;
    return true;
}

Rational strength(const StaticGraph& g, NodeIndex v) {
    Rational s;
    for (NodeIndex u : g.out(v)) s += *g.weight(v, u);
    return s;
}

Metric weighted_density(const StaticGraph& g, DensityVariant variant) {
    Rational total;
    std::optional<Rational> wmax;
    for (const auto& e : g.edges()) {
        const Rational w = g.weighted() ? e.weight : Rational(1);
        total += w;
        wmax = wmax ? max(*wmax, w) : w;
        if (variant == DensityVariant::unit_interval && (w.sign() < 0 || Rational(1) < w))
            throw Error(ErrorCode::invalid_argument, "unit_interval density needs weights in [0,1]");
    }
    const Rational pairs = choose2(g.node_total());
    if (variant == DensityVariant::unit_interval) return ratio(total, pairs);
    if (!wmax || wmax->sign() <= 0) return std::nullopt;
    if (variant == DensityVariant::present_max) return ratio(total, *wmax * edge_count(g));
    return ratio(total, *wmax * pairs);
}

Rational barrat_sum(const StaticGraph& g, NodeIndex v) {
    const auto& nb = g.out(v);
    Rational sum;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            if (g.has_edge(nb[i], nb[j])) sum += *g.weight(v, nb[i]) + *g.weight(v, nb[j]);
    return sum;
}

Metric barrat_clustering(const StaticGraph& g, NodeIndex v) {
    const Rational d = degree(g, v);
    const Rational s = strength(g, v);
    if (d <= Rational(1) || s.is_zero()) return std::nullopt;
    // Σ over ordered pairs of (ω_vi + ω_vj)/2 equals the unordered sum.
    return barrat_sum(g, v) / (s * (d - Rational(1)));
}

void weighted_tally(const StaticGraph& g, NodeIndex v, ValueFn fn, WeightedTally& out) {
    const auto& nb = g.out(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t k = i + 1; k < nb.size(); ++k) {
            const Rational wi = *g.weight(v, nb[i]);
            const Rational wk = *g.weight(v, nb[k]);
            const Value val = pair_value(fn, wi, wk);
            out.open.add(val);
            if (auto wik = g.weight(nb[i], nb[k])) {
                if (fn == ValueFn::product)
                    out.closed.add(wi * wk * *wik);
                else
                    out.closed.add(val);
            }
        }
}

Outcome weighted_clustering(const StaticGraph& g, NodeIndex v, ValueFn fn) {
    WeightedTally t;
    weighted_tally(g, v, fn, t);
    return ratio(t.closed.value(), t.open.value());
}

Outcome weighted_transitivity(const StaticGraph& g, ValueFn fn) {
    WeightedTally t;
    for (NodeIndex v = 0; v < g.node_total(); ++v) weighted_tally(g, v, fn, t);
    return ratio(t.closed.value(), t.open.value());
}

Rational side_count(const StaticGraph& g, Side side) {
    std::size_t c = 0;
    for (NodeIndex v = 0; v < g.node_total(); ++v)
        if (g.side(v) == side) ++c;
    return count(c);
}

Metric side_average_degree(const StaticGraph& g, Side side) {
    std::size_t nodes = 0, total = 0;
    for (NodeIndex v = 0; v < g.node_total(); ++v)
        if (g.side(v) == side) {
            ++nodes;
            total += g.out(v).size();
        }
    return ratio(count(total), count(nodes));
}

Metric bipartite_density(const StaticGraph& g) {
    return ratio(edge_count(g), side_count(g, Side::top) * side_count(g, Side::bottom));
}

Tally jaccard_tally(const StaticGraph& g, NodeIndex u, NodeIndex v) {
    const std::size_t both = common_neighbors(g, u, v);
    return {count(both), count(g.out(u).size() + g.out(v).size() - both)};
}

Metric jaccard(const StaticGraph& g, NodeIndex u, NodeIndex v) {
    if (u == v) throw Error(ErrorCode::invalid_argument, "jaccard needs two distinct nodes");
    if (g.side(u) != g.side(v))
        throw Error(ErrorCode::side_violation, "jaccard needs two nodes of the same side");
    return ratio_of(jaccard_tally(g, u, v));
}

Metric jaccard_clustering(const StaticGraph& g, NodeIndex v) {
    Rational sum;
    std::size_t nn = 0;
    for (NodeIndex u = 0; u < g.node_total(); ++u) {
        if (u == v || common_neighbors(g, u, v) == 0) continue;
        ++nn;
        sum += *jaccard(g, u, v);
    }
    return ratio(sum, count(nn));
}

Tally redundancy_tally(const StaticGraph& g, NodeIndex v) {
    const auto& nb = g.out(v);
    std::size_t open = 0, closed = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            ++open;
            if (adjacent_to_both(g, nb[i], nb[j], {v, nb[i], nb[j]})) ++closed;
        }
    return {count(closed), count(open)};
}

Metric redundancy(const StaticGraph& g, NodeIndex v) { return ratio_of(redundancy_tally(g, v)); }

Tally cc_star_tally(const StaticGraph& g, NodeIndex v) {
    std::size_t open = 0, closed = 0;
    for (NodeIndex b : g.out(v))
        for (NodeIndex c : g.out(v)) {
            if (b == c) continue;
            for (NodeIndex a : g.out(b)) {
                if (a == v || a == c) continue;
                for (NodeIndex d : g.out(c)) {
                    if (d == v || d == a || d == b) continue;
                    ++open;
                    if (adjacent_to_both(g, a, d, {a, b, v, c, d})) ++closed;
                }
            }
        }
    return {count(closed), count(open)};
}

Metric cc_star(const StaticGraph& g, NodeIndex v) { return ratio_of(cc_star_tally(g, v)); }

Tally bipartite_transitivity_tally(const StaticGraph& g, BipartiteTransitivity variant) {
    std::size_t open = 0, closed = 0;
    for (NodeIndex a = 0; a < g.node_total(); ++a)
        for (NodeIndex b : g.out(a))
            for (NodeIndex c : g.out(b)) {
                if (c == a) continue;
                for (NodeIndex d : g.out(c)) {
                    if (d == a || d == b) continue;
                    if (variant == BipartiteTransitivity::quad) {
                        ++open;
                        if (g.has_edge(a, d)) ++closed;
                        continue;
                    }
                    for (NodeIndex e : g.out(d)) {
                        if (e == a || e == b || e == c) continue;
                        ++open;
                        if (adjacent_to_both(g, a, e, {a, b, c, d, e})) ++closed;
                    }
                }
            }
    return {count(closed), count(open)};
}

Metric bipartite_transitivity(const StaticGraph& g, BipartiteTransitivity variant) {
    return ratio_of(bipartite_transitivity_tally(g, variant));
}

StaticGraph project(const StaticGraph& g, Side side, bool weighted) {
    std::vector<GraphNode> nodes;
    std::vector<NodeIndex> members;
    for (NodeIndex v = 0; v < g.node_total(); ++v)
        if (g.side(v) == side) {
            nodes.push_back({g.name(v), std::nullopt, std::nullopt});
            members.push_back(v);
        }
    std::vector<GraphEdge> edges;
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const std::size_t shared = common_neighbors(g, members[i], members[j]);
            if (shared == 0) continue;
            edges.push_back({g.name(members[i]), g.name(members[j]), weighted ? count(shared) : Rational(1)});
        }
    return StaticGraph(Kind::undirected, std::move(nodes), std::move(edges), weighted);
}

Rational out_degree(const StaticGraph& g, NodeIndex v) { return count(g.out(v).size()); }
Rational in_degree(const StaticGraph& g, NodeIndex v) { return count(g.in(v).size()); }

Metric directed_density(const StaticGraph& g) {
    return ratio(edge_count(g), count(g.node_total() * g.node_total()));
}

Metric symmetric_fraction(const StaticGraph& g) {
    std::size_t sym = 0;
    for (const auto& e : g.edges())
        if (g.has_edge(g.index(e.to), g.index(e.from))) ++sym;
    return ratio(count(sym), edge_count(g));
}

Metric loop_fraction(const StaticGraph& g) {
    std::size_t loops = 0;
    for (NodeIndex v = 0; v < g.node_total(); ++v)
        if (g.has_edge(v, v)) ++loops;
    return ratio(count(loops), count(g.node_total()));
}

Tally directed_tally(const StaticGraph& g, NodeIndex v, DirectedVariant variant) {
    std::size_t open = 0, closed = 0;
    if (variant == DirectedVariant::in || variant == DirectedVariant::out) {
        const auto& members = variant == DirectedVariant::in ? g.in(v) : g.out(v);
        for (NodeIndex x : members)
            for (NodeIndex y : members) {
                if (x == y || x == v || y == v) continue;
                ++open;
                if (g.has_edge(x, y)) ++closed;
            }
        return {count(closed), count(open)};
    }
    for (NodeIndex u : g.in(v)) {
        if (u == v) continue;
        for (NodeIndex w : g.out(v)) {
            if (w == v || w == u) continue;
            ++open;
            const bool close = variant == DirectedVariant::cyclic ? g.has_edge(w, u) : g.has_edge(u, w);
            if (close) ++closed;
        }
    }
    return {count(closed), count(open)};
}

Metric directed_clustering(const StaticGraph& g, NodeIndex v, DirectedVariant variant) {
    return ratio_of(directed_tally(g, v, variant));
}

Metric directed_transitivity(const StaticGraph& g, DirectedVariant variant) {
    if (variant == DirectedVariant::in || variant == DirectedVariant::out)
        throw Error(ErrorCode::invalid_argument, "directed transitivity is cyclic or transitive");
    Tally sum;
    for (NodeIndex v = 0; v < g.node_total(); ++v) {
        const Tally t = directed_tally(g, v, variant);
        sum.closed += t.closed;
        sum.open += t.open;
    }
    return ratio_of(sum);
}

bool is_directed_clique(const StaticGraph& g, const std::set<NodeIndex>& c) {
    for (auto i = c.begin(); i != c.end(); ++i)
        for (auto j = std::next(i); j != c.end(); ++j)
            if (!g.has_edge(*i, *j) || !g.has_edge(*j, *i)) return false;
    return true;
}

StaticGraph undirect(const StaticGraph& g) {
    std::vector<GraphEdge> edges;
    for (const auto& e : g.edges())
        if (e.from != e.to) edges.push_back({e.from, e.to});
    std::vector<GraphNode> nodes;
    for (const auto& n : g.nodes()) nodes.push_back({n.name, std::nullopt, std::nullopt});
    // Reciprocal arcs collapse onto the same key.
    return StaticGraph(Kind::undirected, std::move(nodes), std::move(edges), false);
}

}  // namespace graph

}  // namespace sg
