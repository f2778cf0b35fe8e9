#include "support.hpp"

#include "streamgraph/interval_set.hpp"

#include <sstream>

#ifndef SG_DATA_DIR
#define SG_DATA_DIR "data"
#endif

namespace sg::testing {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Rational pick_weight(Rng& rng) {
    static const Rational values[] = {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3)};
    return values[uniform(rng, 0, 4)];
}

// A grid-aligned sub-interval of [lo, hi]; positive length unless points are allowed.
Interval sub_interval(Rng& rng, const Rational& lo, const Rational& hi, const Rational& step, bool points) {
    const Rational cells_q = (hi - lo) / step;
    const int cells = static_cast<int>(cells_q.to_double() + 0.5);
    if (cells == 0) return {lo, lo};
    if (points && chance(rng, 0.1)) {
        const Rational p = lo + step * Rational(uniform(rng, 0, cells));
        return {p, p};
    }
    int a = uniform(rng, 0, cells - 1);
    int b = uniform(rng, a + 1, cells);
    return {lo + step * Rational(a), lo + step * Rational(b)};
}

std::string node_name(int i) { return std::string(1, static_cast<char>('a' + i)); }

void add_weighted_link(Rng& rng, StreamBuilder& b, const std::string& u, const std::string& v, const Interval& iv,
                       const Rational& step, bool weighted) {
    if (!weighted) {
        b.add_link(u, v, iv);
        return;
    }
    const Rational cells_q = iv.length() / step;
    const int cells = static_cast<int>(cells_q.to_double() + 0.5);
    if (cells >= 2 && chance(rng, 0.5)) {
        const Rational mid = iv.begin + step * Rational(uniform(rng, 1, cells - 1));
        b.add_link(u, v, {iv.begin, mid}, pick_weight(rng));
        b.add_link(u, v, {mid, iv.end}, pick_weight(rng));
    } else {
        b.add_link(u, v, iv, pick_weight(rng));
    }
}

}  // namespace

std::string data_path(const std::string& name) { return std::string(SG_DATA_DIR) + "/" + name; }

StreamGraph random_grid_stream(Rng& rng, const GridSpec& spec) {
    const int max_cells = static_cast<int>((spec.max_horizon / spec.step).to_double() + 0.5);
    const Rational begin = spec.step * Rational(uniform(rng, 0, 4));
    const Rational end = begin + spec.step * Rational(uniform(rng, std::min(4, max_cells), max_cells));
    StreamBuilder b(spec.kind, {begin, end});
    if (spec.weighted) b.mark_weighted();

    const int n = uniform(rng, spec.min_nodes, spec.max_nodes);
    std::vector<std::string> names;
    std::vector<Side> sides;
    for (int i = 0; i < n; ++i) {
        names.push_back(node_name(i));
        const Side side = (i == 0 || (i > 1 && chance(rng, 0.5))) ? Side::top : Side::bottom;
        sides.push_back(side);
        if (spec.kind == Kind::bipartite) b.set_side(names.back(), side);
        b.add_node(names.back());
    }

    std::vector<IntervalSet> presence(n);
    for (int i = 0; i < n; ++i) {
        if (!spec.dense && chance(rng, 0.08)) continue;
        std::vector<Interval> raw;
        if (chance(rng, spec.dense ? 0.75 : 0.35)) {
            raw.push_back({begin, end});
        } else {
            const int k = uniform(rng, 1, 2);
            for (int j = 0; j < k; ++j) raw.push_back(sub_interval(rng, begin, end, spec.step, spec.points));
        }
        presence[i] = IntervalSet::normalize(raw);
        b.add_presence(names[i], presence[i]);
        if (spec.node_weights && chance(rng, 0.6))
            for (const auto& comp : presence[i]) b.add_node_weight(names[i], comp, pick_weight(rng));
    }

    auto link = [&](int i, int j) {
        const IntervalSet common = i == j ? presence[i] : intersect(presence[i], presence[j]);
        for (const auto& comp : common) {
            if (comp.is_point() || !chance(rng, spec.dense ? 0.9 : 0.7)) continue;
            const Interval iv = chance(rng, spec.dense ? 0.6 : 0.4) ? comp : sub_interval(rng, comp.begin, comp.end, spec.step, false);
            add_weighted_link(rng, b, names[i], names[j], iv, spec.step, spec.weighted);
        }
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (spec.kind == Kind::directed) {
                if (i == j && !(spec.loops && chance(rng, 0.2))) continue;
                if (i != j && !chance(rng, spec.dense ? 0.75 : 0.5)) continue;
                link(i, j);
                continue;
            }
            if (j <= i) continue;
            if (spec.kind == Kind::bipartite && sides[i] == sides[j]) continue;
            const double p = spec.dense ? 0.9 : (spec.kind == Kind::bipartite ? 0.7 : 0.55);
            if (chance(rng, p)) link(i, j);
        }
    return b.build();
}

StreamGraph random_graph_equivalent(Rng& rng, Kind kind, bool weighted, int max_nodes) {
    const Interval horizon{Rational(0), Rational(uniform(rng, 1, 5))};
    StreamBuilder b(kind, horizon);
    if (weighted) b.mark_weighted();
    const int n = uniform(rng, 1, max_nodes);
    std::vector<Side> sides;
    for (int i = 0; i < n; ++i) {
        const Side side = (i == 0 || (i > 1 && chance(rng, 0.5))) ? Side::top : Side::bottom;
        sides.push_back(side);
        if (kind == Kind::bipartite) b.set_side(node_name(i), side);
        b.add_presence(node_name(i), horizon);
    }
    const double p = chance(rng, 0.3) ? 0.85 : 0.5;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (kind != Kind::directed && j <= i) continue;
            if (kind == Kind::bipartite && sides[i] == sides[j]) continue;
            if (i == j && !chance(rng, 0.25)) continue;
            if (!chance(rng, p)) continue;
            std::optional<Rational> w;
            if (weighted) w = pick_weight(rng);
            b.add_link(node_name(i), node_name(j), horizon, w);
        }
    return b.build();
}

std::vector<MetricRequest> all_requests(const StreamGraph& s) {
    std::vector<MetricRequest> out;
    const Rational mid = (s.horizon().begin + s.horizon().end) / Rational(2);
    for (MetricKind kind : all_metric_kinds()) {
        if (!applies_to(kind, s.kind())) continue;
        MetricRequest base;
        base.kind = kind;
        std::vector<MetricRequest> variants{base};
        auto expand = [&](auto values, auto member) {
            variants.clear();
            for (auto v : values) {
                MetricRequest r = base;
                r.*member = v;
                variants.push_back(r);
            }
        };
        switch (kind) {
            case MetricKind::weighted_clustering:
            case MetricKind::weighted_transitivity:
                expand(std::vector{ValueFn::arith_mean, ValueFn::geo_mean, ValueFn::min, ValueFn::max, ValueFn::product},
                       &MetricRequest::fn);
                break;
            case MetricKind::weighted_density:
                expand(std::vector{DensityVariant::present_max, DensityVariant::all_max, DensityVariant::unit_interval},
                       &MetricRequest::density);
                break;
            case MetricKind::bipartite_transitivity:
                expand(std::vector{BipartiteTransitivity::quad, BipartiteTransitivity::quint}, &MetricRequest::btr);
                break;
            case MetricKind::directed_clustering:
                expand(std::vector{DirectedVariant::cyclic, DirectedVariant::transitive, DirectedVariant::in,
                                   DirectedVariant::out},
                       &MetricRequest::dir);
                break;
            case MetricKind::directed_transitivity:
                expand(std::vector{DirectedVariant::cyclic, DirectedVariant::transitive}, &MetricRequest::dir);
                break;
            case MetricKind::side_count:
            case MetricKind::side_average_degree:
                expand(std::vector{Side::top, Side::bottom}, &MetricRequest::side);
                break;
            case MetricKind::degree_strength:
                expand(std::vector{Rational(0), Rational(1), Rational(2), Rational(-1), Rational(1, 2)},
                       &MetricRequest::alpha);
                break;
            default: break;
        }
        for (const auto& r : variants) {
            switch (scope_of(kind)) {
                case Scope::global: out.push_back(r); break;
                case Scope::node:
                    for (const auto& name : s.names()) {
                        MetricRequest x = r;
                        x.node = name;
                        out.push_back(x);
                    }
                    break;
                case Scope::pair:
                    for (const auto& u : s.names())
                        for (const auto& v : s.names()) {
                            MetricRequest x = r;
                            x.node = u;
                            x.other = v;
                            out.push_back(x);
                            x.at = mid;
                            out.push_back(x);
                        }
                    break;
            }
        }
    }
    return out;
}

std::string Result::describe() const {
    std::ostringstream os;
    if (error)
        os << "error " << to_string(*error);
    else if (!value)
        os << "undefined";
    else if (value->exact)
        os << *value->exact;
    else
        os << value->approx << " (float)";
    return os.str();
}

Result capture(const std::function<Outcome()>& f) {
    Result r;
    try {
        r.value = f();
    } catch (const Error& e) {
        r.error = e.code();
    } catch (const std::invalid_argument&) {
        r.error = ErrorCode::invalid_argument;
    }
    return r;
}

bool same_result(const Result& a, const Result& b) {
    if (a.error || b.error) return a.error == b.error;
    return same_outcome(a.value, b.value);
}

}  // namespace sg::testing
