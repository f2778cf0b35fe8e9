#pragma once

#include "streamgraph/stream_graph.hpp"
#include "streamgraph/value.hpp"
#include "streamgraph/variants.hpp"

#include <optional>
#include <string_view>

namespace sg {

// Bipartite stream metrics. Every operation throws Error(kind_mismatch) on
// a stream that is not bipartite.

/// S_⊤ or S_⊥: undirected stream over one side, u–w present when they share
/// an opposite-side neighbor. When `weighted`, ω(t,uw) counts those
/// neighbors. The input must be unweighted.
StreamGraph project(const StreamGraph& s, Side side, bool weighted);

struct SideCounts {
    Rational top;
    Rational bottom;
};

SideCounts side_counts(const StreamGraph& s);

/// Σ_{v∈side} |T_v|·d(v) / Σ_{v∈side} |T_v|; undefined when the side is never present.
Metric side_average_degree(const StreamGraph& s, Side side);

/// m / Σ_{u∈⊤, v∈⊥} |T_u ∩ T_v|.
Metric bipartite_density(const StreamGraph& s);

/// (C_u ∩ C_v) ⊆ T_uv for all u ∈ top, v ∈ bottom. Throws on side or
/// presence violations.
bool is_bipartite_clique(const StreamGraph& s, const NodeSets& top, const NodeSets& bottom);

/// Jaccard coefficient of two same-side nodes; instantaneous when `at` is given.
Metric jaccard(const StreamGraph& s, NodeIndex u, NodeIndex v, std::optional<Rational> at = std::nullopt);

/// Co-presence weighted average of cc(uv) over the nodes u sharing some
/// neighbor with v at some time.
Metric jaccard_clustering(const StreamGraph& s, NodeIndex v);

Metric redundancy(const StreamGraph& s, NodeIndex v);
Metric cc_star(const StreamGraph& s, NodeIndex v);
Metric bipartite_transitivity(const StreamGraph& s, BipartiteTransitivity variant);

}  // namespace sg
