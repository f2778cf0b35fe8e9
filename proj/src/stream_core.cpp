#include "streamgraph/stream_core.hpp"

#include "streamgraph/error.hpp"

namespace sg {

namespace detail {

void require_not_directed(const StreamGraph& s, std::string_view what) {
    if (s.directed())
        throw Error(ErrorCode::kind_mismatch,
                    std::string(what) + " requires an undirected or bipartite stream, got directed");
}

void require_kind(const StreamGraph& s, Kind kind, std::string_view what) {
    if (s.kind() != kind)
        throw Error(ErrorCode::kind_mismatch, std::string(what) + " requires a " + std::string(to_string(kind)) +
                                                  " stream, got " + std::string(to_string(s.kind())));
}

Rational checked_duration(const StreamGraph& s) {
    Rational d = s.duration();
    if (d.is_zero()) throw Error(ErrorCode::undefined_horizon, "time horizon has zero length");
    return d;
}

void check_subset_of_w(const StreamGraph& s, const NodeSets& c) {
    for (const auto& [name, set] : c) {
        if (!set.is_subset_of(s.presence(s.index(name))))
            throw Error(ErrorCode::not_subset,
                        "clique candidate for '" + name + "' " + set.to_string() + " exceeds node presence");
    }
}

}  // namespace detail

Rational node_count(const StreamGraph& s) {
    const Rational t = detail::checked_duration(s);
    Rational total;
    for (NodeIndex v = 0; v < s.node_total(); ++v) total += s.presence(v).measure();
    return total / t;
}

Rational link_count(const StreamGraph& s) {
    const Rational t = detail::checked_duration(s);
    Rational total;
    for (const auto& l : s.links()) total += l.presence.measure();
    return total / t;
}

NodeSets neighborhood(const StreamGraph& s, std::string_view v) {
    detail::require_not_directed(s, "neighborhood");
    NodeSets out;
    for (const auto& inc : s.neighbors(s.index(v))) out.emplace(s.name(inc.node), s.links()[inc.link].presence);
    return out;
}

Rational degree(const StreamGraph& s, NodeIndex v) {
    detail::require_not_directed(s, "degree");
    const Rational t = detail::checked_duration(s);
    Rational total;
    for (const auto& inc : s.neighbors(v)) total += s.links()[inc.link].presence.measure();
    return total / t;
}

Rational degree(const StreamGraph& s, std::string_view v) { return degree(s, s.index(v)); }

Metric average_degree(const StreamGraph& s) {
    detail::require_not_directed(s, "average degree");
    Rational w;
    Rational weighted;
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        const Rational tv = s.presence(v).measure();
        w += tv;
        if (!tv.is_zero()) weighted += tv * degree(s, v);
    }
    return ratio(weighted, w);
}

Metric density(const StreamGraph& s) {
    detail::require_not_directed(s, "density");
    Rational links;
    for (const auto& l : s.links()) links += l.presence.measure();
    Rational copresence;
    for (NodeIndex u = 0; u < s.node_total(); ++u)
        for (NodeIndex v = u + 1; v < s.node_total(); ++v)
            copresence += overlap_measure(s.presence(u), s.presence(v));
    return ratio(links, copresence);
}

bool is_clique(const StreamGraph& s, const NodeSets& c) {
    detail::require_not_directed(s, "clique");
    detail::check_subset_of_w(s, c);
    for (auto i = c.begin(); i != c.end(); ++i) {
        const NodeIndex u = s.index(i->first);
        for (auto j = std::next(i); j != c.end(); ++j) {
            const IntervalSet together = intersect(i->second, j->second);
            if (together.empty()) continue;
            if (!together.is_subset_of(s.link_presence(u, s.index(j->first)))) return false;
        }
    }
    return true;
}

StreamGraph substream(const StreamGraph& s, const NodeSets& c) {
    detail::check_subset_of_w(s, c);
    StreamBuilder b(s.kind(), s.horizon());
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        b.add_node(s.name(v));
        if (auto side = s.side(v)) b.set_side(s.name(v), *side);
    }
    for (const auto& [name, set] : c) b.add_presence(name, set);
    for (const auto& l : s.links()) {
        auto cu = c.find(s.name(l.from));
        auto cv = c.find(s.name(l.to));
        if (cu == c.end() || cv == c.end()) continue;
        b.add_link(s.name(l.from), s.name(l.to), intersect(l.presence, intersect(cu->second, cv->second)));
    }
    return b.build();
}

namespace {

// Open and closed neighbor-pair measure around v.
void accumulate_center(const StreamGraph& s, NodeIndex v, Rational& open, Rational& closed) {
    const auto& adj = s.neighbors(v);
    for (std::size_t i = 0; i < adj.size(); ++i) {
        const IntervalSet& tu = s.links()[adj[i].link].presence;
        for (std::size_t j = i + 1; j < adj.size(); ++j) {
            const IntervalSet both = intersect(tu, s.links()[adj[j].link].presence);
            if (both.empty()) continue;
            open += both.measure();
            if (const Link* uw = s.find_link(adj[i].node, adj[j].node)) closed += overlap_measure(both, uw->presence);
        }
    }
}

}  // namespace

Metric clustering_coefficient(const StreamGraph& s, NodeIndex v) {
    detail::require_not_directed(s, "clustering coefficient");
    Rational open, closed;
    accumulate_center(s, v, open, closed);
    return ratio(closed, open);
}

Metric clustering_coefficient(const StreamGraph& s, std::string_view v) {
    return clustering_coefficient(s, s.index(v));
}

Metric transitivity(const StreamGraph& s) {
    detail::require_not_directed(s, "transitivity");
    Rational open, closed;
    for (NodeIndex v = 0; v < s.node_total(); ++v) accumulate_center(s, v, open, closed);
    return ratio(closed, open);
}

bool is_graph_equivalent(const StreamGraph& s) {
    const IntervalSet whole = IntervalSet::normalize({s.horizon()});
    for (NodeIndex v = 0; v < s.node_total(); ++v)
        if (s.presence(v) != whole) return false;
    for (const auto& l : s.links())
        if (l.presence != whole) return false;
    return true;
}

}  // namespace sg
