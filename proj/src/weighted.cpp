#include "streamgraph/weighted.hpp"

#include "streamgraph/error.hpp"
#include "streamgraph/static_graph.hpp"
#include "streamgraph/stream_core.hpp"

#include <cmath>

namespace sg {

namespace {

Rational power(const Rational& base, const mpz_class& exponent) {
    mpq_class result(1);
    mpq_class b = base.mpq();
    mpz_class e = abs(exponent);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result *= b;
        b *= b;
        e >>= 1;
    }
    if (exponent < 0) result = 1 / result;
    return Rational::from_mpq(result);
}

// Calls fn(segment, a-value, b-value) for each positive-length overlap of
// pieces of a and b.
template <typename Fn>
void for_each_overlap(const StepWeight& a, const StepWeight& b, Fn&& fn) {
    auto i = a.pieces().begin();
    auto j = b.pieces().begin();
    while (i != a.pieces().end() && j != b.pieces().end()) {
        const Rational lo = max(i->interval.begin, j->interval.begin);
        const Rational hi = min(i->interval.end, j->interval.end);
        if (lo < hi) fn(IntervalSet::single(lo, hi), i->value, j->value);
        if (i->interval.end < j->interval.end)
            ++i;
        else
            ++j;
    }
}

void weighted_center(const StreamGraph& s, NodeIndex v, ValueFn fn, MixedSum& open, MixedSum& closed) {
    const auto& adj = s.neighbors(v);
    for (std::size_t i = 0; i < adj.size(); ++i) {
        const Link& vi = s.links()[adj[i].link];
        for (std::size_t k = i + 1; k < adj.size(); ++k) {
            const Link& vk = s.links()[adj[k].link];
            const Link* ik = s.find_link(adj[i].node, adj[k].node);
            for_each_overlap(vi.weight, vk.weight, [&](const IntervalSet& seg, const Rational& a, const Rational& b) {
                const Value val = graph::pair_value(fn, a, b);
                open.add_scaled(val, seg.measure());
                if (!ik) return;
                if (fn == ValueFn::product)
                    closed.add(a * b * ik->weight.integrate(seg));
                else
                    closed.add_scaled(val, overlap_measure(seg, ik->presence));
            });
        }
    }
}

}  // namespace

WeightStats weight_stats(const StreamGraph& s) {
    if (!s.weighted())
        throw Error(ErrorCode::unweighted, "stream is unweighted; every link weight is implicitly 1");
    std::optional<Rational> lo, hi;
    Rational total, length;
    for (const auto& l : s.links()) {
        const auto a = l.weight.min_value();
        const auto b = l.weight.max_value();
        if (!a) continue;
        lo = lo ? min(*lo, *a) : *a;
        hi = hi ? max(*hi, *b) : *b;
        total += l.weight.integrate();
        length += l.presence.measure();
    }
    if (!lo) throw Error(ErrorCode::unweighted, "stream has no weighted link");
    return {*lo, *hi, ratio(total, length)};
}

Rational strength(const StreamGraph& s, NodeIndex v) {
    detail::require_not_directed(s, "strength");
    const Rational t = detail::checked_duration(s);
    Rational total;
    for (const auto& inc : s.neighbors(v)) total += s.links()[inc.link].weight.integrate();
    return total / t;
}

Rational strength(const StreamGraph& s, std::string_view v) { return strength(s, s.index(v)); }

Outcome degree_strength_value(const Rational& d, const Rational& st, const Rational& alpha) {
    if (d.is_zero()) return std::nullopt;
    if (alpha.is_integer()) {
        const mpz_class e(alpha.mpq().get_num());
        if (st.is_zero() && e < 0) return std::nullopt;
        return Value::of(d * power(st / d, e));
    }
    const double r = std::pow((st / d).to_double(), alpha.to_double());
    if (!std::isfinite(r)) return std::nullopt;
    return Value::inexact(d.to_double() * r);
}

Outcome degree_strength_combo(const StreamGraph& s, NodeIndex v, const Rational& alpha) {
    return degree_strength_value(degree(s, v), strength(s, v), alpha);
}

Metric weighted_density(const StreamGraph& s, DensityVariant variant) {
    detail::require_not_directed(s, "weighted density");
    const Rational t = detail::checked_duration(s);
    Rational total, present;
    std::optional<Rational> wmax;
    for (const auto& l : s.links()) {
        total += l.weight.integrate();
        present += l.presence.measure();
        if (auto m = l.weight.max_value()) wmax = wmax ? max(*wmax, *m) : *m;
        if (variant == DensityVariant::unit_interval) {
            const auto lo = l.weight.min_value();
            const auto hi = l.weight.max_value();
            if ((lo && lo->sign() < 0) || (hi && Rational(1) < *hi))
                throw Error(ErrorCode::invalid_argument, "unit_interval density needs weights in [0,1]");
        }
    }
    const std::int64_t n = static_cast<std::int64_t>(s.node_total());
    const Rational pairs = Rational(n * (n - 1) / 2) * t;
    if (variant == DensityVariant::unit_interval) return ratio(total, pairs);
    if (!wmax || wmax->sign() <= 0) return std::nullopt;
    if (variant == DensityVariant::present_max) return ratio(total, *wmax * present);
    return ratio(total, *wmax * pairs);
}

Metric weighted_clustering_barrat(const StreamGraph& s, NodeIndex v) {
    const Rational d = degree(s, v);
    const Rational st = strength(s, v);
    if (d <= Rational(1) || st.is_zero()) return std::nullopt;
    const auto& adj = s.neighbors(v);
    Rational sum;
    for (std::size_t i = 0; i < adj.size(); ++i) {
        const Link& vi = s.links()[adj[i].link];
        for (std::size_t j = i + 1; j < adj.size(); ++j) {
            const Link* ij = s.find_link(adj[i].node, adj[j].node);
            if (!ij) continue;
            const Link& vj = s.links()[adj[j].link];
            const IntervalSet closed = intersect(intersect(vi.presence, vj.presence), ij->presence);
            if (closed.empty()) continue;
            sum += vi.weight.integrate(closed) + vj.weight.integrate(closed);
        }
    }
    return sum / (st * (d - Rational(1)) * s.duration());
}

Outcome weighted_clustering_general(const StreamGraph& s, NodeIndex v, ValueFn fn) {
    detail::require_not_directed(s, "weighted clustering");
    MixedSum open, closed;
    weighted_center(s, v, fn, open, closed);
    return ratio(closed.value(), open.value());
}

Outcome weighted_transitivity(const StreamGraph& s, ValueFn fn) {
    detail::require_not_directed(s, "weighted transitivity");
    MixedSum open, closed;
    for (NodeIndex v = 0; v < s.node_total(); ++v) weighted_center(s, v, fn, open, closed);
    return ratio(closed.value(), open.value());
}

StreamGraph threshold(const StreamGraph& s, const Rational& tau) {
    StreamBuilder b(s.kind(), s.horizon());
    std::vector<IntervalSet> kept(s.node_total());
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        const StepWeight* w = s.node_weight(v);
        kept[v] = w ? w->at_least(tau) : s.presence(v);
        b.add_node(s.name(v));
        if (auto side = s.side(v)) b.set_side(s.name(v), *side);
        b.add_presence(s.name(v), kept[v]);
    }
    for (const auto& l : s.links()) {
        const IntervalSet presence = intersect(l.weight.at_least(tau), intersect(kept[l.from], kept[l.to]));
        b.add_link(s.name(l.from), s.name(l.to), presence);
    }
    return b.build();
}

namespace {

// Window measure |[t−r, t+r] ∩ set|.
Rational window(const IntervalSet& set, const Rational& t, const Rational& r) {
    return overlap_measure(set, IntervalSet::single(t - r, t + r));
}

std::vector<WeightPiece> delta_pieces(const IntervalSet& original, const IntervalSet& dilated, const Interval& horizon,
                                      const Rational& r, const Rational& resolution) {
    std::vector<WeightPiece> pieces;
    for (const auto& comp : dilated) {
        if (comp.is_point()) {
            pieces.push_back({comp, window(original, comp.begin, r)});
            continue;
        }
        // First cell of the grid anchored at horizon.begin that reaches into comp.
        mpz_class k = mpz_class(((comp.begin - horizon.begin) / resolution).mpq().get_num()) /
                      mpz_class(((comp.begin - horizon.begin) / resolution).mpq().get_den());
        Rational lo = horizon.begin + Rational::from_mpq(mpq_class(k)) * resolution;
        while (lo < comp.end) {
            const Rational hi = lo + resolution;
            const Rational a = max(lo, comp.begin);
            const Rational b = min(hi, comp.end);
            if (a < b) pieces.push_back({{a, b}, window(original, (a + b) / Rational(2), r)});
            lo = hi;
        }
    }
    return pieces;
}

}  // namespace

StreamGraph delta_analysis(const StreamGraph& s, const Rational& delta, const Rational& resolution) {
    if (s.weighted()) throw Error(ErrorCode::invalid_argument, "delta analysis expects an unweighted stream");
    if (delta.sign() <= 0) throw Error(ErrorCode::invalid_argument, "delta must be positive");
    if (resolution.sign() <= 0) throw Error(ErrorCode::invalid_argument, "resolution must be positive");
    if (delta >= s.duration())
        throw Error(ErrorCode::invalid_argument, "delta " + delta.to_string() + " is not below |T| = " +
                                                     s.duration().to_string());
    const Rational r = delta / Rational(2);
    const Interval horizon{s.horizon().begin + r, s.horizon().end - r};
    StreamBuilder b(s.kind(), horizon);
    b.mark_weighted();
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        b.add_node(s.name(v));
        if (auto side = s.side(v)) b.set_side(s.name(v), *side);
        const IntervalSet dilated = dilate(s.presence(v), r, horizon);
        b.add_presence(s.name(v), dilated);
        for (const auto& p : delta_pieces(s.presence(v), dilated, horizon, r, resolution))
            b.add_node_weight(s.name(v), p.interval, p.value);
    }
    for (const auto& l : s.links()) {
        const IntervalSet dilated = dilate(l.presence, r, horizon);
        for (const auto& p : delta_pieces(l.presence, dilated, horizon, r, resolution))
            b.add_link(s.name(l.from), s.name(l.to), p.interval, p.value);
    }
    return b.build();
}

}  // namespace sg
