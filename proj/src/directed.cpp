#include "streamgraph/directed.hpp"

#include "streamgraph/error.hpp"
#include "streamgraph/stream_core.hpp"

namespace sg {

namespace {

void require_directed(const StreamGraph& s, std::string_view what) { detail::require_kind(s, Kind::directed, what); }

}  // namespace

NodeSets out_neighborhood(const StreamGraph& s, std::string_view v) {
    require_directed(s, "out-neighborhood");
    NodeSets out;
    for (const auto& inc : s.out_arcs(s.index(v))) out.emplace(s.name(inc.node), s.links()[inc.link].presence);
    return out;
}

NodeSets in_neighborhood(const StreamGraph& s, std::string_view v) {
    require_directed(s, "in-neighborhood");
    NodeSets out;
    for (const auto& inc : s.in_arcs(s.index(v))) out.emplace(s.name(inc.node), s.links()[inc.link].presence);
    return out;
}

Rational out_degree(const StreamGraph& s, NodeIndex v) {
    require_directed(s, "out-degree");
    const Rational t = detail::checked_duration(s);
    Rational total;
    for (const auto& inc : s.out_arcs(v)) total += s.links()[inc.link].presence.measure();
    return total / t;
}

Rational in_degree(const StreamGraph& s, NodeIndex v) {
    require_directed(s, "in-degree");
    const Rational t = detail::checked_duration(s);
    Rational total;
    for (const auto& inc : s.in_arcs(v)) total += s.links()[inc.link].presence.measure();
    return total / t;
}

Metric directed_density(const StreamGraph& s) {
    require_directed(s, "directed density");
    Rational arcs;
    for (const auto& l : s.links()) arcs += l.presence.measure();
    Rational copresence;
    for (NodeIndex u = 0; u < s.node_total(); ++u) {
        copresence += s.presence(u).measure();
        for (NodeIndex v = u + 1; v < s.node_total(); ++v)
            copresence += Rational(2) * overlap_measure(s.presence(u), s.presence(v));
    }
    return ratio(arcs, copresence);
}

bool is_directed_clique(const StreamGraph& s, const NodeSets& c) {
    require_directed(s, "directed clique");
    detail::check_subset_of_w(s, c);
    for (auto i = c.begin(); i != c.end(); ++i) {
        const NodeIndex u = s.index(i->first);
        for (auto j = std::next(i); j != c.end(); ++j) {
            const NodeIndex v = s.index(j->first);
            const IntervalSet together = intersect(i->second, j->second);
            if (together.empty()) continue;
            if (!together.is_subset_of(s.link_presence(u, v)) || !together.is_subset_of(s.link_presence(v, u)))
                return false;
        }
    }
    return true;
}

SymmetryStats symmetry_stats(const StreamGraph& s) {
    require_directed(s, "symmetry statistics");
    Rational arcs, symmetric, loops, presence;
    for (const auto& l : s.links()) {
        arcs += l.presence.measure();
        if (l.from == l.to) {
            loops += l.presence.measure();
            symmetric += l.presence.measure();
        } else {
            symmetric += overlap_measure(l.presence, s.link_presence(l.to, l.from));
        }
    }
    for (NodeIndex v = 0; v < s.node_total(); ++v) presence += s.presence(v).measure();
    return {ratio(symmetric, arcs), ratio(loops, presence)};
}

namespace {

void closure_center(const StreamGraph& s, NodeIndex v, DirectedVariant variant, Rational& open, Rational& closed) {
    for (const auto& uv : s.in_arcs(v)) {
        if (uv.node == v) continue;
        for (const auto& vw : s.out_arcs(v)) {
            if (vw.node == v || vw.node == uv.node) continue;
            const IntervalSet path = intersect(s.links()[uv.link].presence, s.links()[vw.link].presence);
            if (path.empty()) continue;
            open += path.measure();
            const IntervalSet& close = variant == DirectedVariant::cyclic ? s.link_presence(vw.node, uv.node)
                                                                          : s.link_presence(uv.node, vw.node);
            closed += overlap_measure(path, close);
        }
    }
}

}  // namespace

Metric directed_clustering(const StreamGraph& s, NodeIndex v, DirectedVariant variant) {
    require_directed(s, "directed clustering");
    Rational open, closed;
    if (variant == DirectedVariant::in || variant == DirectedVariant::out) {
        const auto& arcs = variant == DirectedVariant::in ? s.in_arcs(v) : s.out_arcs(v);
        for (const auto& x : arcs) {
            if (x.node == v) continue;
            for (const auto& y : arcs) {
                if (y.node == v || y.node == x.node) continue;
                const IntervalSet both = intersect(s.links()[x.link].presence, s.links()[y.link].presence);
                if (both.empty()) continue;
                open += both.measure();
                closed += overlap_measure(both, s.link_presence(x.node, y.node));
            }
        }
        return ratio(closed, open);
    }
    closure_center(s, v, variant, open, closed);
    return ratio(closed, open);
}

Metric directed_transitivity(const StreamGraph& s, DirectedVariant variant) {
    require_directed(s, "directed transitivity");
    if (variant == DirectedVariant::in || variant == DirectedVariant::out)
        throw Error(ErrorCode::invalid_argument, "directed transitivity is cyclic or transitive");
    Rational open, closed;
    for (NodeIndex v = 0; v < s.node_total(); ++v) closure_center(s, v, variant, open, closed);
    return ratio(closed, open);
}

StreamGraph undirect(const StreamGraph& s) {
    require_directed(s, "undirect");
    StreamBuilder b(Kind::undirected, s.horizon());
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        b.add_node(s.name(v));
        b.add_presence(s.name(v), s.presence(v));
    }
    // Repeated link declarations are united by the builder.
    for (const auto& l : s.links())
        if (l.from != l.to) b.add_link(s.name(l.from), s.name(l.to), l.presence);
    return b.build();
}

}  // namespace sg
