#pragma once

#include "streamgraph/static_graph.hpp"
#include "streamgraph/stream_graph.hpp"
#include "streamgraph/value.hpp"
#include "streamgraph/variants.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace sg {

/// Every scalar metric of the catalog, addressable by name. The same request
/// can be evaluated in closed form, by the grid oracle, or on a static graph.
enum class MetricKind {
    node_count,
    link_count,
    degree,
    average_degree,
    density,
    clustering,
    transitivity,
    strength,
    degree_strength,
    weighted_density,
    barrat,
    weighted_clustering,
    weighted_transitivity,
    side_count,
    side_average_degree,
    bipartite_density,
    jaccard,
    jaccard_clustering,
    redundancy,
    cc_star,
    bipartite_transitivity,
    out_degree,
    in_degree,
    directed_density,
    symmetric_fraction,
    loop_fraction,
    directed_clustering,
    directed_transitivity,
};

enum class Scope { global, node, pair };

std::string_view to_string(MetricKind kind);
std::optional<MetricKind> parse_metric_kind(std::string_view text);
std::span<const MetricKind> all_metric_kinds();
std::string_view to_string(Scope scope);
Scope scope_of(MetricKind kind);

/// Kinds of stream a metric applies to.
bool applies_to(MetricKind metric, Kind kind);

struct MetricRequest {
    MetricKind kind = MetricKind::node_count;
    std::string node;   // node-scoped metrics
    std::string other;  // second node of pair metrics
    ValueFn fn = ValueFn::arith_mean;
    DensityVariant density = DensityVariant::present_max;
    BipartiteTransitivity btr = BipartiteTransitivity::quad;
    DirectedVariant dir = DirectedVariant::cyclic;
    Side side = Side::top;
    Rational alpha{1};
    std::optional<Rational> at;  // instantaneous jaccard

    /// Short label with the variant, e.g. "weighted_clustering[geo]".
    std::string label() const;
};

/// Throws Error(kind_mismatch) when the metric does not apply to `kind`.
void check_applicable(const MetricRequest& req, Kind kind);

/// Closed-form evaluation through the interval algebra.
Outcome evaluate(const StreamGraph& s, const MetricRequest& req);

/// The same metric on a classical graph.
Outcome graph_metric(const StaticGraph& g, const MetricRequest& req);

}  // namespace sg
