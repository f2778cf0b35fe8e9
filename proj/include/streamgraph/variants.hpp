#pragma once

#include <optional>
#include <string_view>

namespace sg {

/// Value assigned to an open triplet (i, v, k) from the weights of its two
/// center-adjacent links; `product` additionally multiplies the closing
/// link's weight into the closed value.
enum class ValueFn { arith_mean, geo_mean, min, max, product };

enum class DensityVariant { present_max, all_max, unit_interval };

enum class BipartiteTransitivity { quad, quint };

/// in/out are only meaningful for clustering.
enum class DirectedVariant { cyclic, transitive, in, out };

std::string_view to_string(ValueFn v);
std::string_view to_string(DensityVariant v);
std::string_view to_string(BipartiteTransitivity v);
std::string_view to_string(DirectedVariant v);

std::optional<ValueFn> parse_value_fn(std::string_view text);
std::optional<DensityVariant> parse_density_variant(std::string_view text);
std::optional<BipartiteTransitivity> parse_bipartite_transitivity(std::string_view text);
std::optional<DirectedVariant> parse_directed_variant(std::string_view text);

}  // namespace sg
