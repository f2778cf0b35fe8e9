#pragma once

#include "streamgraph/stream_graph.hpp"
#include "streamgraph/value.hpp"
#include "streamgraph/variants.hpp"

#include <string_view>

namespace sg {

// Directed stream metrics. Every operation throws Error(kind_mismatch) on
// a stream that is not directed.

/// u → T_{v,u}.
NodeSets out_neighborhood(const StreamGraph& s, std::string_view v);
/// u → T_{u,v}.
NodeSets in_neighborhood(const StreamGraph& s, std::string_view v);

Rational out_degree(const StreamGraph& s, NodeIndex v);
Rational in_degree(const StreamGraph& s, NodeIndex v);

/// m / Σ_{(u,v)∈V×V} |T_u ∩ T_v|, loops included.
Metric directed_density(const StreamGraph& s);

/// Both arcs present on C_u ∩ C_v for every pair u ≠ v of C.
bool is_directed_clique(const StreamGraph& s, const NodeSets& c);

struct SymmetryStats {
    /// Σ|T_{u,v} ∩ T_{v,u}| / (m·|T|); loops count as symmetric.
    Metric symmetric_fraction;
    /// Σ|T_{v,v}| / Σ|T_v|.
    Metric loop_fraction;
};

SymmetryStats symmetry_stats(const StreamGraph& s);

/// cyclic / transitive: fraction of two-paths u→v→w (distinct nodes) closed by
/// w→u / u→w. in / out: loop-free density of the in- (out-) neighborhood,
/// where neighbor x is present on T_{x,v} (T_{v,x}).
Metric directed_clustering(const StreamGraph& s, NodeIndex v, DirectedVariant variant);

/// Global cyclic or transitive closure ratio; in/out throw invalid_argument.
Metric directed_transitivity(const StreamGraph& s, DirectedVariant variant);

/// Undirected stream with T_uv = T_{u,v} ∪ T_{v,u}; loops and weights dropped.
StreamGraph undirect(const StreamGraph& s);

}  // namespace sg
