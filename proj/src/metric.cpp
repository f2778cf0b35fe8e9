#include "streamgraph/metric.hpp"

#include "streamgraph/bipartite.hpp"
#include "streamgraph/directed.hpp"
#include "streamgraph/error.hpp"
#include "streamgraph/stream_core.hpp"
#include "streamgraph/weighted.hpp"

#include <array>
#include <utility>

namespace sg {

namespace {

constexpr std::array<std::pair<MetricKind, std::string_view>, 28> kNames{{
    {MetricKind::node_count, "node_count"},
    {MetricKind::link_count, "link_count"},
    {MetricKind::degree, "degree"},
    {MetricKind::average_degree, "average_degree"},
    {MetricKind::density, "density"},
    {MetricKind::clustering, "clustering"},
    {MetricKind::transitivity, "transitivity"},
    {MetricKind::strength, "strength"},
    {MetricKind::degree_strength, "degree_strength"},
    {MetricKind::weighted_density, "weighted_density"},
    {MetricKind::barrat, "barrat"},
    {MetricKind::weighted_clustering, "weighted_clustering"},
    {MetricKind::weighted_transitivity, "weighted_transitivity"},
    {MetricKind::side_count, "side_count"},
    {MetricKind::side_average_degree, "side_average_degree"},
    {MetricKind::bipartite_density, "bipartite_density"},
    {MetricKind::jaccard, "jaccard"},
    {MetricKind::jaccard_clustering, "jaccard_clustering"},
    {MetricKind::redundancy, "redundancy"},
    {MetricKind::cc_star, "cc_star"},
    {MetricKind::bipartite_transitivity, "bipartite_transitivity"},
    {MetricKind::out_degree, "out_degree"},
    {MetricKind::in_degree, "in_degree"},
    {MetricKind::directed_density, "directed_density"},
    {MetricKind::symmetric_fraction, "symmetric_fraction"},
    {MetricKind::loop_fraction, "loop_fraction"},
    {MetricKind::directed_clustering, "directed_clustering"},
    {MetricKind::directed_transitivity, "directed_transitivity"},
}};

constexpr std::array<MetricKind, 28> kAll = [] {
    std::array<MetricKind, 28> out{};
    for (std::size_t i = 0; i < kNames.size(); ++i) out[i] = kNames[i].first;
    return out;
}();

}  // namespace

std::string_view to_string(MetricKind kind) {
    for (const auto& [k, name] : kNames)
        if (k == kind) return name;
    return "?";
}

std::optional<MetricKind> parse_metric_kind(std::string_view text) {
    for (const auto& [k, name] : kNames)
        if (name == text) return k;
    return std::nullopt;
}

std::span<const MetricKind> all_metric_kinds() { return kAll; }

std::string_view to_string(Scope scope) {
    switch (scope) {
        case Scope::global: return "global";
        case Scope::node: return "node";
        case Scope::pair: return "pair";
    }
    return "?";
}

Scope scope_of(MetricKind kind) {
    switch (kind) {
        case MetricKind::degree:
        case MetricKind::clustering:
        case MetricKind::strength:
        case MetricKind::degree_strength:
        case MetricKind::barrat:
        case MetricKind::weighted_clustering:
        case MetricKind::jaccard_clustering:
        case MetricKind::redundancy:
        case MetricKind::cc_star:
        case MetricKind::out_degree:
        case MetricKind::in_degree:
        case MetricKind::directed_clustering: return Scope::node;
        case MetricKind::jaccard: return Scope::pair;
        default: return Scope::global;
    }
}

bool applies_to(MetricKind metric, Kind kind) {
    switch (metric) {
        case MetricKind::node_count:
        case MetricKind::link_count: return true;
        case MetricKind::side_count:
        case MetricKind::side_average_degree:
        case MetricKind::bipartite_density:
        case MetricKind::jaccard:
        case MetricKind::jaccard_clustering:
        case MetricKind::redundancy:
        case MetricKind::cc_star:
        case MetricKind::bipartite_transitivity: return kind == Kind::bipartite;
        case MetricKind::out_degree:
        case MetricKind::in_degree:
        case MetricKind::directed_density:
        case MetricKind::symmetric_fraction:
        case MetricKind::loop_fraction:
        case MetricKind::directed_clustering:
        case MetricKind::directed_transitivity: return kind == Kind::directed;
        default: return kind != Kind::directed;
    }
}

std::string MetricRequest::label() const {
    std::string out(to_string(kind));
    auto tag = [&](std::string_view v) { out += "[" + std::string(v) + "]"; };
    switch (kind) {
        case MetricKind::weighted_clustering:
        case MetricKind::weighted_transitivity: tag(to_string(fn)); break;
        case MetricKind::weighted_density: tag(to_string(density)); break;
        case MetricKind::bipartite_transitivity: tag(to_string(btr)); break;
        case MetricKind::directed_clustering:
        case MetricKind::directed_transitivity: tag(to_string(dir)); break;
        case MetricKind::side_count:
        case MetricKind::side_average_degree: tag(to_string(side)); break;
        case MetricKind::degree_strength: tag("alpha=" + alpha.to_string()); break;
        default: break;
    }
    return out;
}

void check_applicable(const MetricRequest& req, Kind kind) {
    if (!applies_to(req.kind, kind)) {
        std::string required = applies_to(req.kind, Kind::bipartite)
                                   ? (applies_to(req.kind, Kind::undirected) ? "an undirected or bipartite" : "a bipartite")
                                   : "a directed";
        throw Error(ErrorCode::kind_mismatch, std::string(to_string(req.kind)) + " requires " + required +
                                                  " stream, got " + std::string(to_string(kind)));
    }
    if (req.kind == MetricKind::directed_transitivity &&
        (req.dir == DirectedVariant::in || req.dir == DirectedVariant::out))
        throw Error(ErrorCode::invalid_argument, "directed transitivity is cyclic or transitive");
}

Outcome evaluate(const StreamGraph& s, const MetricRequest& req) {
    check_applicable(req, s.kind());
    auto node = [&] { return s.index(req.node); };
    switch (req.kind) {
        case MetricKind::node_count: return to_outcome(node_count(s));
        case MetricKind::link_count: return to_outcome(link_count(s));
        case MetricKind::degree: return to_outcome(degree(s, node()));
        case MetricKind::average_degree: return to_outcome(average_degree(s));
        case MetricKind::density: return to_outcome(density(s));
        case MetricKind::clustering: return to_outcome(clustering_coefficient(s, node()));
        case MetricKind::transitivity: return to_outcome(transitivity(s));
        case MetricKind::strength: return to_outcome(strength(s, node()));
        case MetricKind::degree_strength: return degree_strength_combo(s, node(), req.alpha);
        case MetricKind::weighted_density: return to_outcome(weighted_density(s, req.density));
        case MetricKind::barrat: return to_outcome(weighted_clustering_barrat(s, node()));
        case MetricKind::weighted_clustering: return weighted_clustering_general(s, node(), req.fn);
        case MetricKind::weighted_transitivity: return weighted_transitivity(s, req.fn);
        case MetricKind::side_count: {
            const SideCounts c = side_counts(s);
            return to_outcome(req.side == Side::top ? c.top : c.bottom);
        }
        case MetricKind::side_average_degree: return to_outcome(side_average_degree(s, req.side));
        case MetricKind::bipartite_density: return to_outcome(bipartite_density(s));
        case MetricKind::jaccard: return to_outcome(jaccard(s, node(), s.index(req.other), req.at));
        case MetricKind::jaccard_clustering: return to_outcome(jaccard_clustering(s, node()));
        case MetricKind::redundancy: return to_outcome(redundancy(s, node()));
        case MetricKind::cc_star: return to_outcome(cc_star(s, node()));
        case MetricKind::bipartite_transitivity: return to_outcome(bipartite_transitivity(s, req.btr));
        case MetricKind::out_degree: return to_outcome(out_degree(s, node()));
        case MetricKind::in_degree: return to_outcome(in_degree(s, node()));
        case MetricKind::directed_density: return to_outcome(directed_density(s));
        case MetricKind::symmetric_fraction: return to_outcome(symmetry_stats(s).symmetric_fraction);
        case MetricKind::loop_fraction: return to_outcome(symmetry_stats(s).loop_fraction);
        case MetricKind::directed_clustering: return to_outcome(directed_clustering(s, node(), req.dir));
        case MetricKind::directed_transitivity: return to_outcome(directed_transitivity(s, req.dir));
    }
    return std::nullopt;
}

Outcome graph_metric(const StaticGraph& g, const MetricRequest& req) {
    check_applicable(req, g.kind());
    auto node = [&] { return g.index(req.node); };
    switch (req.kind) {
        case MetricKind::node_count: return to_outcome(graph::node_count(g));
        case MetricKind::link_count: return to_outcome(graph::edge_count(g));
        case MetricKind::degree: return to_outcome(graph::degree(g, node()));
        case MetricKind::average_degree: return to_outcome(graph::average_degree(g));
        case MetricKind::density: return to_outcome(graph::density(g));
        case MetricKind::clustering: return to_outcome(graph::clustering(g, node()));
        case MetricKind::transitivity: return to_outcome(graph::transitivity(g));
        case MetricKind::strength: return to_outcome(graph::strength(g, node()));
        case MetricKind::degree_strength:
            return degree_strength_value(graph::degree(g, node()), graph::strength(g, node()), req.alpha);
        case MetricKind::weighted_density: return to_outcome(graph::weighted_density(g, req.density));
        case MetricKind::barrat: return to_outcome(graph::barrat_clustering(g, node()));
        case MetricKind::weighted_clustering: return graph::weighted_clustering(g, node(), req.fn);
        case MetricKind::weighted_transitivity: return graph::weighted_transitivity(g, req.fn);
        case MetricKind::side_count: return to_outcome(graph::side_count(g, req.side));
        case MetricKind::side_average_degree: return to_outcome(graph::side_average_degree(g, req.side));
        case MetricKind::bipartite_density: return to_outcome(graph::bipartite_density(g));
        case MetricKind::jaccard: return to_outcome(graph::jaccard(g, node(), g.index(req.other)));
        case MetricKind::jaccard_clustering: return to_outcome(graph::jaccard_clustering(g, node()));
        case MetricKind::redundancy: return to_outcome(graph::redundancy(g, node()));
        case MetricKind::cc_star: return to_outcome(graph::cc_star(g, node()));
        case MetricKind::bipartite_transitivity: return to_outcome(graph::bipartite_transitivity(g, req.btr));
        case MetricKind::out_degree: return to_outcome(graph::out_degree(g, node()));
        case MetricKind::in_degree: return to_outcome(graph::in_degree(g, node()));
        case MetricKind::directed_density: return to_outcome(graph::directed_density(g));
        case MetricKind::symmetric_fraction: return to_outcome(graph::symmetric_fraction(g));
        case MetricKind::loop_fraction: return to_outcome(graph::loop_fraction(g));
        case MetricKind::directed_clustering: return to_outcome(graph::directed_clustering(g, node(), req.dir));
        case MetricKind::directed_transitivity: return to_outcome(graph::directed_transitivity(g, req.dir));
    }
    return std::nullopt;
}

}  // namespace sg
