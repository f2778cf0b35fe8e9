#pragma once

#include "streamgraph/stream_graph.hpp"
#include "streamgraph/value.hpp"

#include <string_view>

namespace sg {

// Basic stream graph metrics. Undirected semantics: degree, density,
// clustering and transitivity reject directed streams (see directed.hpp or
// undirect()). Counts work for every kind.

/// n = Σ_v |T_v| / |T|. Throws Error(undefined_horizon) when |T| = 0.
Rational node_count(const StreamGraph& s);
/// m = Σ_uv |T_uv| / |T| (arcs when directed).
Rational link_count(const StreamGraph& s);

NodeSets neighborhood(const StreamGraph& s, std::string_view v);
Rational degree(const StreamGraph& s, std::string_view v);
Rational degree(const StreamGraph& s, NodeIndex v);

/// Σ_v (|T_v| / |W|) d(v); undefined when W is empty.
Metric average_degree(const StreamGraph& s);

/// m / Σ_{uv} |T_u ∩ T_v|; undefined when no two nodes are ever co-present.
Metric density(const StreamGraph& s);

/// Strict set check: (C_u ∩ C_v) ⊆ T_uv for every pair of C.
/// Throws Error(not_subset) if C is not contained in W.
bool is_clique(const StreamGraph& s, const NodeSets& c);

/// The substream induced by C: presence C_v, links T_uv ∩ C_u ∩ C_v.
/// Nodes absent from C keep an empty presence. Weights are dropped.
StreamGraph substream(const StreamGraph& s, const NodeSets& c);

/// Density of v's neighborhood: Σ|T_vu ∩ T_vw ∩ T_uw| / Σ|T_vu ∩ T_vw|.
Metric clustering_coefficient(const StreamGraph& s, std::string_view v);
Metric clustering_coefficient(const StreamGraph& s, NodeIndex v);

Metric transitivity(const StreamGraph& s);

/// True iff every T_v = T and every link is present over all of T.
bool is_graph_equivalent(const StreamGraph& s);

namespace detail {
void require_not_directed(const StreamGraph& s, std::string_view what);
void require_kind(const StreamGraph& s, Kind kind, std::string_view what);
Rational checked_duration(const StreamGraph& s);
void check_subset_of_w(const StreamGraph& s, const NodeSets& c);
}  // namespace detail

}  // namespace sg
