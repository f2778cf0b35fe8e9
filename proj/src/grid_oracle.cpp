#include "streamgraph/grid_oracle.hpp"

#include "streamgraph/error.hpp"
#include "streamgraph/weighted.hpp"

namespace sg {

namespace {

constexpr std::size_t kMaxCells = 1'000'000;

Rational count(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

std::size_t degree_in(const StaticGraph& g, std::string_view v) {
    auto i = g.find(v);
    return i ? g.out(*i).size() : 0;
}

}  // namespace

GridPlan make_plan(const Interval& horizon, const Rational& step) {
    if (step.sign() <= 0) throw Error(ErrorCode::invalid_argument, "grid step must be positive");
    if (horizon.length().is_zero()) throw Error(ErrorCode::undefined_horizon, "time horizon has zero length");
    if (horizon.length() / step > Rational(static_cast<std::int64_t>(kMaxCells)))
        throw Error(ErrorCode::invalid_argument, "grid step too fine for this horizon");
    GridPlan plan{step, {}};
    for (Rational lo = horizon.begin; lo < horizon.end; lo += step) {
        const Rational hi = min(lo + step, horizon.end);
        plan.cells.push_back({{lo, hi}, (lo + hi) / Rational(2)});
    }
    return plan;
}

GridOracle::GridOracle(const StreamGraph& s, const Rational& step) : stream_(s), plan_(make_plan(s.horizon(), step)) {
    samples_.reserve(plan_.cells.size());
    for (const auto& c : plan_.cells) samples_.push_back({c.cell.length(), snapshot(s, c.midpoint)});
}

template <typename Fn>
Rational GridOracle::integrate(Fn&& f) const {
    Rational total;
    for (const auto& s : samples_) {
        const Rational x = f(s.graph);
        if (!x.is_zero()) total += s.length * x;
    }
    return total;
}

Rational GridOracle::node_time(std::string_view v) const {
    return integrate([&](const StaticGraph& g) { return Rational(g.find(v) ? 1 : 0); });
}

Rational GridOracle::degree_of(std::string_view v) const {
    return integrate([&](const StaticGraph& g) { return count(degree_in(g, v)); }) / stream_.duration();
}

Rational GridOracle::strength_of(std::string_view v) const {
    return integrate([&](const StaticGraph& g) {
               auto i = g.find(v);
               return i ? graph::strength(g, *i) : Rational(0);
           }) /
           stream_.duration();
}

Metric GridOracle::presence_weighted_degree(std::optional<Side> side) const {
    Rational total, weighted;
    for (NodeIndex v = 0; v < stream_.node_total(); ++v) {
        if (side && stream_.side(v) != side) continue;
        const Rational tv = node_time(stream_.name(v));
        total += tv;
        if (!tv.is_zero()) weighted += tv * degree_of(stream_.name(v));
    }
    return ratio(weighted, total);
}

Outcome GridOracle::evaluate(const MetricRequest& req) const {
    check_applicable(req, stream_.kind());
    const Rational t = stream_.duration();
    const std::string& v = req.node;
    if (scope_of(req.kind) != Scope::global) stream_.index(v);
    if (scope_of(req.kind) == Scope::pair) stream_.index(req.other);

    auto tally_ratio = [&](auto&& tally) -> Outcome {
        Rational closed, open;
        for (const auto& s : samples_) {
            const std::optional<graph::Tally> x = tally(s.graph);
            if (!x) continue;
            closed += s.length * x->closed;
            open += s.length * x->open;
        }
        return to_outcome(ratio(closed, open));
    };
    auto at_node = [&](auto&& fn) {
        return [&, f = fn](const StaticGraph& g) -> std::optional<graph::Tally> {
            auto i = g.find(v);
            if (!i) return std::nullopt;
            return f(g, *i);
        };
    };
    auto all_nodes = [&](auto&& fn) {
        return [&, f = fn](const StaticGraph& g) -> std::optional<graph::Tally> {
            graph::Tally sum;
            for (NodeIndex i = 0; i < g.node_total(); ++i) {
                const graph::Tally x = f(g, i);
                sum.closed += x.closed;
                sum.open += x.open;
            }
            return sum;
        };
    };
    auto weighted_ratio = [&](bool global) -> Outcome {
        MixedSum closed, open;
        for (const auto& s : samples_) {
            graph::WeightedTally x;
            if (global) {
                for (NodeIndex i = 0; i < s.graph.node_total(); ++i) graph::weighted_tally(s.graph, i, req.fn, x);
            } else if (auto i = s.graph.find(v)) {
                graph::weighted_tally(s.graph, *i, req.fn, x);
            }
            closed.add_scaled(x.closed.value(), s.length);
            open.add_scaled(x.open.value(), s.length);
        }
        return ratio(closed.value(), open.value());
    };

    switch (req.kind) {
        case MetricKind::node_count:
            return to_outcome(integrate([](const StaticGraph& g) { return graph::node_count(g); }) / t);
        case MetricKind::link_count:
            return to_outcome(integrate([](const StaticGraph& g) { return graph::edge_count(g); }) / t);
        case MetricKind::degree: return to_outcome(degree_of(v));
        case MetricKind::average_degree: return to_outcome(presence_weighted_degree(std::nullopt));
        case MetricKind::density: {
            const Rational links = integrate([](const StaticGraph& g) { return graph::edge_count(g); });
            const Rational pairs = integrate([](const StaticGraph& g) {
                const std::size_t n = g.node_total();
                return count(n * (n - (n > 0 ? 1 : 0)) / 2);
            });
            return to_outcome(ratio(links, pairs));
        }
        case MetricKind::clustering: return tally_ratio(at_node(graph::clustering_tally));
        case MetricKind::transitivity: return tally_ratio(all_nodes(graph::clustering_tally));
        case MetricKind::strength: return to_outcome(strength_of(v));
        case MetricKind::degree_strength: return degree_strength_value(degree_of(v), strength_of(v), req.alpha);
        case MetricKind::weighted_density: {
            Rational total, present;
            std::optional<Rational> wmax;
            for (const auto& s : samples_)
                for (const auto& e : s.graph.edges()) {
                    const Rational w = stream_.weighted() ? e.weight : Rational(1);
                    total += s.length * w;
                    present += s.length;
                    wmax = wmax ? max(*wmax, w) : w;
                    if (req.density == DensityVariant::unit_interval && (w.sign() < 0 || Rational(1) < w))
                        throw Error(ErrorCode::invalid_argument, "unit_interval density needs weights in [0,1]");
                }
            const std::size_t n = stream_.node_total();
            const Rational pairs = count(n * (n - (n > 0 ? 1 : 0)) / 2) * t;
            if (req.density == DensityVariant::unit_interval) return to_outcome(ratio(total, pairs));
            if (!wmax || wmax->sign() <= 0) return std::nullopt;
            if (req.density == DensityVariant::present_max) return to_outcome(ratio(total, *wmax * present));
            return to_outcome(ratio(total, *wmax * pairs));
        }
        case MetricKind::barrat: {
            const Rational d = degree_of(v);
            const Rational s = strength_of(v);
            if (d <= Rational(1) || s.is_zero()) return std::nullopt;
            const Rational sum = integrate([&](const StaticGraph& g) {
                auto i = g.find(v);
                return i ? graph::barrat_sum(g, *i) : Rational(0);
            });
            return Value::of(sum / (s * (d - Rational(1)) * t));
        }
        case MetricKind::weighted_clustering: return weighted_ratio(false);
        case MetricKind::weighted_transitivity: return weighted_ratio(true);
        case MetricKind::side_count:
            return to_outcome(integrate([&](const StaticGraph& g) { return graph::side_count(g, req.side); }) / t);
        case MetricKind::side_average_degree: return to_outcome(presence_weighted_degree(req.side));
        case MetricKind::bipartite_density: {
            const Rational links = integrate([](const StaticGraph& g) { return graph::edge_count(g); });
            const Rational pairs = integrate([](const StaticGraph& g) {
                return graph::side_count(g, Side::top) * graph::side_count(g, Side::bottom);
            });
            return to_outcome(ratio(links, pairs));
        }
        case MetricKind::jaccard: {
            const NodeIndex a = stream_.index(v);
            const NodeIndex b = stream_.index(req.other);
            if (a == b) throw Error(ErrorCode::invalid_argument, "jaccard needs two distinct nodes");
            if (stream_.side(a) != stream_.side(b))
                throw Error(ErrorCode::side_violation, "nodes '" + v + "' and '" + req.other + "' are on different sides");
            auto pair_tally = [&](const StaticGraph& g) -> std::optional<graph::Tally> {
                auto i = g.find(v);
                auto j = g.find(req.other);
                if (i && j) return graph::jaccard_tally(g, *i, *j);
                const std::size_t deg = i ? g.out(*i).size() : (j ? g.out(*j).size() : 0);
                return graph::Tally{Rational(0), count(deg)};
            };
            if (req.at) {
                if (!stream_.horizon().contains(*req.at))
                    throw Error(ErrorCode::invalid_argument, "time " + req.at->to_string() + " outside the horizon");
                const graph::Tally x = *pair_tally(snapshot(stream_, *req.at));
                return to_outcome(ratio(x.closed, x.open));
            }
            return tally_ratio(pair_tally);
        }
        case MetricKind::jaccard_clustering: {
            const NodeIndex self = stream_.index(v);
            Rational weighted, total;
            for (NodeIndex u = 0; u < stream_.node_total(); ++u) {
                if (u == self || stream_.side(u) != stream_.side(self)) continue;
                const std::string& un = stream_.name(u);
                Rational both, either, copresence;
                for (const auto& s : samples_) {
                    auto i = s.graph.find(v);
                    auto j = s.graph.find(un);
                    if (i && j) {
                        const graph::Tally x = graph::jaccard_tally(s.graph, *i, *j);
                        both += s.length * x.closed;
                        either += s.length * x.open;
                        copresence += s.length;
                    } else if (i || j) {
                        either += s.length * count(s.graph.out(i ? *i : *j).size());
                    }
                }
                if (both.is_zero()) continue;
                weighted += copresence * both / either;
                total += copresence;
            }
            return to_outcome(ratio(weighted, total));
        }
        case MetricKind::redundancy: return tally_ratio(at_node(graph::redundancy_tally));
        case MetricKind::cc_star: return tally_ratio(at_node(graph::cc_star_tally));
        case MetricKind::bipartite_transitivity:
            return tally_ratio([&](const StaticGraph& g) -> std::optional<graph::Tally> {
                return graph::bipartite_transitivity_tally(g, req.btr);
            });
        case MetricKind::out_degree: return to_outcome(degree_of(v));
        case MetricKind::in_degree:
            return to_outcome(integrate([&](const StaticGraph& g) {
                                  auto i = g.find(v);
                                  return i ? graph::in_degree(g, *i) : Rational(0);
                              }) /
                              t);
        case MetricKind::directed_density: {
            const Rational arcs = integrate([](const StaticGraph& g) { return graph::edge_count(g); });
            const Rational pairs = integrate([](const StaticGraph& g) { return count(g.node_total() * g.node_total()); });
            return to_outcome(ratio(arcs, pairs));
        }
        case MetricKind::symmetric_fraction: {
            const Rational arcs = integrate([](const StaticGraph& g) { return graph::edge_count(g); });
            const Rational sym = integrate([](const StaticGraph& g) {
                std::size_t c = 0;
                for (const auto& e : g.edges())
                    if (g.has_edge(g.index(e.to), g.index(e.from))) ++c;
                return count(c);
            });
            return to_outcome(ratio(sym, arcs));
        }
        case MetricKind::loop_fraction: {
            const Rational loops = integrate([](const StaticGraph& g) {
                std::size_t c = 0;
                for (NodeIndex i = 0; i < g.node_total(); ++i) c += g.has_edge(i, i);
                return count(c);
            });
            const Rational nodes = integrate([](const StaticGraph& g) { return graph::node_count(g); });
            return to_outcome(ratio(loops, nodes));
        }
        case MetricKind::directed_clustering:
            return tally_ratio(at_node([&](const StaticGraph& g, NodeIndex i) { return graph::directed_tally(g, i, req.dir); }));
        case MetricKind::directed_transitivity:
            return tally_ratio(
                all_nodes([&](const StaticGraph& g, NodeIndex i) { return graph::directed_tally(g, i, req.dir); }));
    }
    return std::nullopt;
}

Outcome oracle_metric(const StreamGraph& s, const MetricRequest& req, const Rational& step) {
    return GridOracle(s, step).evaluate(req);
}

}  // namespace sg
