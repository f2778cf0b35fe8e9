#include "streamgraph/variants.hpp"

namespace sg {

std::string_view to_string(ValueFn v) {
    switch (v) {
        case ValueFn::arith_mean: return "arith";
        case ValueFn::geo_mean: return "geo";
        case ValueFn::min: return "min";
        case ValueFn::max: return "max";
        case ValueFn::product: return "product";
    }
    return "?";
}

std::string_view to_string(DensityVariant v) {
    switch (v) {
        case DensityVariant::present_max: return "present_max";
        case DensityVariant::all_max: return "all_max";
        case DensityVariant::unit_interval: return "unit_interval";
    }
    return "?";
}

std::string_view to_string(BipartiteTransitivity v) { return v == BipartiteTransitivity::quad ? "quad" : "quint"; }

std::string_view to_string(DirectedVariant v) {
    switch (v) {
        case DirectedVariant::cyclic: return "cyclic";
        case DirectedVariant::transitive: return "transitive";
        case DirectedVariant::in: return "in";
        case DirectedVariant::out: return "out";
    }
    return "?";
}

std::optional<ValueFn> parse_value_fn(std::string_view t) {
    if (t == "arith" || t == "arith_mean") return ValueFn::arith_mean;
    if (t == "geo" || t == "geo_mean") return ValueFn::geo_mean;
    if (t == "min") return ValueFn::min;
    if (t == "max") return ValueFn::max;
    if (t == "product") return ValueFn::product;
    return std::nullopt;
}

std::optional<DensityVariant> parse_density_variant(std::string_view t) {
    if (t == "present_max") return DensityVariant::present_max;
    if (t == "all_max") return DensityVariant::all_max;
    if (t == "unit_interval") return DensityVariant::unit_interval;
    return std::nullopt;
}

std::optional<BipartiteTransitivity> parse_bipartite_transitivity(std::string_view t) {
    if (t == "quad") return BipartiteTransitivity::quad;
    if (t == "quint") return BipartiteTransitivity::quint;
    return std::nullopt;
}

std::optional<DirectedVariant> parse_directed_variant(std::string_view t) {
    if (t == "cyclic") return DirectedVariant::cyclic;
    if (t == "transitive") return DirectedVariant::transitive;
    if (t == "in") return DirectedVariant::in;
    if (t == "out") return DirectedVariant::out;
    return std::nullopt;
}

}  // namespace sg
