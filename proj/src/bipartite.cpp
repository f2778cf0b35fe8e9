#include "streamgraph/bipartite.hpp"

#include "streamgraph/error.hpp"
#include "streamgraph/stream_core.hpp"

#include <algorithm>

namespace sg {

namespace {

void require_bipartite(const StreamGraph& s, std::string_view what) { detail::require_kind(s, Kind::bipartite, what); }

// ∪ over x ∉ excluded of T_ax ∩ T_bx.
IntervalSet shared_cover(const StreamGraph& s, NodeIndex a, NodeIndex b, std::initializer_list<NodeIndex> excluded) {
    std::vector<IntervalSet> parts;
    for (const auto& inc : s.neighbors(a)) {
        if (std::find(excluded.begin(), excluded.end(), inc.node) != excluded.end()) continue;
        const IntervalSet& other = s.link_presence(b, inc.node);
        if (other.empty()) continue;
        IntervalSet both = intersect(s.links()[inc.link].presence, other);
        if (!both.empty()) parts.push_back(std::move(both));
    }
    return unite_all(parts);
}

void require_same_side(const StreamGraph& s, NodeIndex u, NodeIndex v) {
    if (u == v) throw Error(ErrorCode::invalid_argument, "jaccard needs two distinct nodes");
    if (s.side(u) != s.side(v))
        throw Error(ErrorCode::side_violation, "nodes '" + s.name(u) + "' and '" + s.name(v) + "' are on different sides");
}

}  // namespace

StreamGraph project(const StreamGraph& s, Side side, bool weighted) {
    require_bipartite(s, "projection");
    if (s.weighted()) throw Error(ErrorCode::invalid_argument, "projection requires an unweighted bipartite stream");
    StreamBuilder b(Kind::undirected, s.horizon());
    if (weighted) b.mark_weighted();
    std::vector<NodeIndex> members;
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        if (s.side(v) != side) continue;
        members.push_back(v);
        b.add_node(s.name(v));
        b.add_presence(s.name(v), s.presence(v));
    }
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            const NodeIndex u = members[i];
            const NodeIndex w = members[j];
            std::vector<IntervalSet> via;
            for (const auto& inc : s.neighbors(u)) {
                IntervalSet both = intersect(s.links()[inc.link].presence, s.link_presence(w, inc.node));
                if (!both.empty()) via.push_back(std::move(both));
            }
            if (via.empty()) continue;
            if (!weighted) {
                b.add_link(s.name(u), s.name(w), unite_all(via));
                continue;
            }
            const StepWeight cover = count_cover(via);
            for (const auto& p : cover.pieces()) b.add_link(s.name(u), s.name(w), p.interval, p.value);
        }
    return b.build();
}

SideCounts side_counts(const StreamGraph& s) {
    require_bipartite(s, "side counts");
    const Rational t = detail::checked_duration(s);
    SideCounts c;
    for (NodeIndex v = 0; v < s.node_total(); ++v)
        (s.side(v) == Side::top ? c.top : c.bottom) += s.presence(v).measure();
    c.top /= t;
    c.bottom /= t;
    return c;
}

Metric side_average_degree(const StreamGraph& s, Side side) {
    require_bipartite(s, "side average degree");
    Rational w, weighted;
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        if (s.side(v) != side) continue;
        const Rational tv = s.presence(v).measure();
        w += tv;
        if (!tv.is_zero()) weighted += tv * degree(s, v);
    }
    return ratio(weighted, w);
}

Metric bipartite_density(const StreamGraph& s) {
    require_bipartite(s, "bipartite density");
    Rational links;
    for (const auto& l : s.links()) links += l.presence.measure();
    Rational copresence;
    for (NodeIndex u = 0; u < s.node_total(); ++u)
        for (NodeIndex v = 0; v < s.node_total(); ++v)
            if (s.side(u) == Side::top && s.side(v) == Side::bottom)
                copresence += overlap_measure(s.presence(u), s.presence(v));
    return ratio(links, copresence);
}

bool is_bipartite_clique(const StreamGraph& s, const NodeSets& top, const NodeSets& bottom) {
    require_bipartite(s, "bipartite clique");
    detail::check_subset_of_w(s, top);
    detail::check_subset_of_w(s, bottom);
    for (const auto& [name, set] : top)
        if (s.side(s.index(name)) != Side::top)
            throw Error(ErrorCode::side_violation, "'" + name + "' is not a top node");
    for (const auto& [name, set] : bottom)
        if (s.side(s.index(name)) != Side::bottom)
            throw Error(ErrorCode::side_violation, "'" + name + "' is not a bottom node");
    for (const auto& [u, cu] : top)
        for (const auto& [v, cv] : bottom) {
            const IntervalSet together = intersect(cu, cv);
            if (together.empty()) continue;
            if (!together.is_subset_of(s.link_presence(s.index(u), s.index(v)))) return false;
        }
    return true;
}

Metric jaccard(const StreamGraph& s, NodeIndex u, NodeIndex v, std::optional<Rational> at) {
    require_bipartite(s, "jaccard");
    require_same_side(s, u, v);
    if (at) {
        if (!s.horizon().contains(*at))
            throw Error(ErrorCode::invalid_argument, "time " + at->to_string() + " outside the horizon");
        std::int64_t both = 0, either = 0;
        for (NodeIndex w = 0; w < s.node_total(); ++w) {
            const bool a = s.link_presence(u, w).contains(*at);
            const bool b = s.link_presence(v, w).contains(*at);
            both += a && b;
            either += a || b;
        }
        return ratio(Rational(both), Rational(either));
    }
    Rational both, either;
    for (NodeIndex w = 0; w < s.node_total(); ++w) {
        const IntervalSet& a = s.link_presence(u, w);
        const IntervalSet& b = s.link_presence(v, w);
        if (a.empty() && b.empty()) continue;
        const Rational common = overlap_measure(a, b);
        both += common;
        either += a.measure() + b.measure() - common;
    }
    return ratio(both, either);
}

Metric jaccard_clustering(const StreamGraph& s, NodeIndex v) {
    require_bipartite(s, "jaccard clustering");
    Rational weighted, total;
    for (NodeIndex u = 0; u < s.node_total(); ++u) {
        if (u == v || s.side(u) != s.side(v)) continue;
        Rational common;
        for (const auto& inc : s.neighbors(u)) common += overlap_measure(s.links()[inc.link].presence, s.link_presence(v, inc.node));
        if (common.is_zero()) continue;
        const Rational copresence = overlap_measure(s.presence(u), s.presence(v));
        weighted += copresence * *jaccard(s, u, v);
        total += copresence;
    }
    return ratio(weighted, total);
}

Metric redundancy(const StreamGraph& s, NodeIndex v) {
    require_bipartite(s, "redundancy");
    const auto& adj = s.neighbors(v);
    Rational open, closed;
    for (std::size_t i = 0; i < adj.size(); ++i)
        for (std::size_t j = i + 1; j < adj.size(); ++j) {
            const IntervalSet base = intersect(s.links()[adj[i].link].presence, s.links()[adj[j].link].presence);
            if (base.empty()) continue;
            open += base.measure();
            closed += overlap_measure(base, shared_cover(s, adj[i].node, adj[j].node, {v, adj[i].node, adj[j].node}));
        }
    return ratio(closed, open);
}

Metric cc_star(const StreamGraph& s, NodeIndex v) {
    require_bipartite(s, "cc*");
    Rational open, closed;
    for (const auto& vb : s.neighbors(v))
        for (const auto& vc : s.neighbors(v)) {
            if (vb.node == vc.node) continue;
            const IntervalSet bc = intersect(s.links()[vb.link].presence, s.links()[vc.link].presence);
            if (bc.measure().is_zero()) continue;
            for (const auto& ba : s.neighbors(vb.node)) {
                if (ba.node == v || ba.node == vc.node) continue;
                const IntervalSet abc = intersect(bc, s.links()[ba.link].presence);
                if (abc.measure().is_zero()) continue;
                for (const auto& cd : s.neighbors(vc.node)) {
                    if (cd.node == v || cd.node == ba.node || cd.node == vb.node) continue;
                    const IntervalSet all = intersect(abc, s.links()[cd.link].presence);
                    if (all.measure().is_zero()) continue;
                    open += all.measure();
                    closed += overlap_measure(all, shared_cover(s, ba.node, cd.node, {ba.node, vb.node, v, vc.node, cd.node}));
                }
            }
        }
    return ratio(closed, open);
}

Metric bipartite_transitivity(const StreamGraph& s, BipartiteTransitivity variant) {
    require_bipartite(s, "bipartite transitivity");
    Rational open, closed;
    for (NodeIndex a = 0; a < s.node_total(); ++a)
        for (const auto& ab : s.neighbors(a))
            for (const auto& bc : s.neighbors(ab.node)) {
                if (bc.node == a) continue;
                const IntervalSet abc = intersect(s.links()[ab.link].presence, s.links()[bc.link].presence);
                if (abc.measure().is_zero()) continue;
                for (const auto& cd : s.neighbors(bc.node)) {
                    if (cd.node == a || cd.node == ab.node) continue;
                    const IntervalSet abcd = intersect(abc, s.links()[cd.link].presence);
                    if (abcd.measure().is_zero()) continue;
                    if (variant == BipartiteTransitivity::quad) {
                        open += abcd.measure();
                        closed += overlap_measure(abcd, s.link_presence(a, cd.node));
                        continue;
                    }
                    for (const auto& de : s.neighbors(cd.node)) {
                        if (de.node == a || de.node == ab.node || de.node == bc.node) continue;
                        const IntervalSet path = intersect(abcd, s.links()[de.link].presence);
                        if (path.measure().is_zero()) continue;
                        open += path.measure();
                        closed += overlap_measure(
                            path, shared_cover(s, a, de.node, {a, ab.node, bc.node, cd.node, de.node}));
                    }
                }
            }
    return ratio(closed, open);
}

}  // namespace sg
