#pragma once

#include "streamgraph/stream_graph.hpp"
#include "streamgraph/value.hpp"
#include "streamgraph/variants.hpp"

#include <string_view>

namespace sg {

// Weighted stream metrics. Only links carry weights here; an unweighted
// stream behaves as if every link had weight 1. Directed streams are rejected.

/// ∫ over `over` of w, zero outside the support.
inline Rational integrate(const StepWeight& w, const IntervalSet& over) { return w.integrate(over); }

struct WeightStats {
    Rational min;
    Rational max;
    /// Σ∫ω / Σ|T_uv|; undefined when every link is instantaneous.
    Metric mean;
};

/// Extremal and time-averaged link weights. Throws Error(unweighted) for
/// unweighted streams, where every weight is implicitly 1.
WeightStats weight_stats(const StreamGraph& s);

/// s(v) = Σ_u ∫ω(t,uv) dt / |T|.
Rational strength(const StreamGraph& s, NodeIndex v);
Rational strength(const StreamGraph& s, std::string_view v);

/// d(v)·(s(v)/d(v))^α. Exact for integer α, floating point otherwise.
/// Undefined when d(v) = 0.
Outcome degree_strength_combo(const StreamGraph& s, NodeIndex v, const Rational& alpha);
/// d·(s/d)^α from given degree and strength.
Outcome degree_strength_value(const Rational& d, const Rational& s, const Rational& alpha);

/// Σ∫ω divided by ω_max·Σ|T_uv| (present_max), ω_max·|T|·|V⊗V| (all_max) or
/// |T|·|V⊗V| (unit_interval, which throws unless every weight is in [0,1]).
Metric weighted_density(const StreamGraph& s, DensityVariant variant);

/// Σ_{i<j} ∫_{T_vi∩T_vj∩T_ij} (ω_vi + ω_vj) / (s(v)·(d(v)−1)·|T|).
/// Undefined when d(v) ≤ 1 or s(v) = 0.
Metric weighted_clustering_barrat(const StreamGraph& s, NodeIndex v);

/// Closed over open value of neighbor pairs around v, integrated over time.
Outcome weighted_clustering_general(const StreamGraph& s, NodeIndex v, ValueFn fn);
Outcome weighted_transitivity(const StreamGraph& s, ValueFn fn);

/// S_τ: unweighted stream keeping the times where weights are ≥ τ. Nodes
/// without weights keep their presence; links are clipped to their
/// thresholded endpoints.
StreamGraph threshold(const StreamGraph& s, const Rational& tau);

/// S_Δ over T' = [x+Δ/2, y−Δ/2]: presence dilated by Δ/2 and weighted by the
/// measure of T_v (T_uv) inside the window [t−Δ/2, t+Δ/2], sampled at the
/// midpoint of each piece of a grid of the given resolution.
StreamGraph delta_analysis(const StreamGraph& s, const Rational& delta, const Rational& resolution);

}  // namespace sg
