#include "helpers.hpp"

#include "streamgraph/bipartite.hpp"
#include "streamgraph/grid_oracle.hpp"
#include "streamgraph/stream_core.hpp"

using namespace sg;
using namespace sg::testing;

namespace {

// Complete bipartite stream, every node and link present on [0,2].
StreamGraph complete(int top, int bottom) {
    std::string text = "stream bipartite\nT 0 2\n";
    for (int i = 0; i < top; ++i) text += "side t" + std::to_string(i) + " top\n";
    for (int j = 0; j < bottom; ++j) text += "side b" + std::to_string(j) + " bottom\n";
    for (int i = 0; i < top; ++i)
        for (int j = 0; j < bottom; ++j) text += "L t" + std::to_string(i) + " b" + std::to_string(j) + " 0 2\n";
    std::string nodes;
    for (int i = 0; i < top; ++i) nodes += "N t" + std::to_string(i) + " 0 2\n";
    for (int j = 0; j < bottom; ++j) nodes += "N b" + std::to_string(j) + " 0 2\n";
    const auto cut = text.find("L ");
    return parse_stream(text.substr(0, cut) + nodes + text.substr(cut));
}

MetricRequest req(MetricKind kind, std::string node) {
    MetricRequest r;
    r.kind = kind;
    r.node = std::move(node);
    return r;
}

}  // namespace

TEST_SUITE("bipartite") {

TEST_CASE("projections of the bipartite example") {
    const auto s = fixture("bipartite.sg");
    const auto bottom = project(s, Side::bottom, false);
    CHECK(bottom.kind() == Kind::undirected);
    CHECK(bottom.node_total() == 3);
    CHECK(bottom.link_presence(bottom.index("a"), bottom.index("c")) == IntervalSet::of({{1, 2}, {3, 5}}));
    CHECK(bottom.link_presence(bottom.index("b"), bottom.index("c")) == IntervalSet::of({{2, 7}}));
    const auto weighted = project(s, Side::bottom, true);
    const Link* bc = weighted.find_link(weighted.index("b"), weighted.index("c"));
    REQUIRE(bc);
    CHECK(bc->weight.value_at(R(9, 2)) == R(2));
    CHECK(bc->weight.value_at(R(3)) == R(1));
    CHECK(bc->weight.value_at(R(6)) == R(1));
    const auto top = project(s, Side::top, false);
    CHECK(top.link_presence(top.index("u"), top.index("v")) == IntervalSet::of({{1, 5}}));

    const auto lonely = parse_stream("stream bipartite\nT 0 1\nside t top\nside x bottom\nN t 0 1\nN x 0 1\nL t x 0 1\n");
    CHECK(project(lonely, Side::top, false).links().empty());
    CHECK(error_of([] { project(fixture("small.sg"), Side::top, false); }) == ErrorCode::kind_mismatch);
}

TEST_CASE("weighted projection integrates to the co-neighbor measure") {
    Rng rng(77);
    for (int i = 0; i < 60; ++i) {
        const auto s = random_grid_stream(rng, GridSpec{Kind::bipartite, false});
        for (Side side : {Side::top, Side::bottom}) {
            const auto p = project(s, side, true);
            for (const auto& l : p.links()) {
                const NodeIndex u = s.index(p.name(l.from));
                const NodeIndex w = s.index(p.name(l.to));
                Rational shared;
                for (NodeIndex x = 0; x < s.node_total(); ++x)
                    shared += measure(intersect(s.link_presence(u, x), s.link_presence(w, x)));
                CHECK(l.weight.integrate() == shared);
            }
        }
    }
}

TEST_CASE("side counts and degrees") {
    const auto s = fixture("bipartite.sg");
    const SideCounts c = side_counts(s);
    CHECK(c.top == R(2));
    CHECK(c.bottom == R(3));
    CHECK(side_average_degree(s, Side::top) == Metric(R(7, 5)));
    CHECK(side_average_degree(s, Side::bottom) == Metric(R(14, 15)));
    CHECK(bipartite_density(s) == Metric(R(7, 15)));
    CHECK(link_count(s) == R(14, 5));

    const auto empty = parse_stream("stream bipartite\nT 0 4\n");
    CHECK(side_counts(empty).top == R(0));
    CHECK(side_counts(empty).bottom == R(0));
    CHECK_FALSE(side_average_degree(empty, Side::top).has_value());

    const auto half = parse_stream("stream bipartite\nT 0 4\nside t top\nN t 0 2\n");
    CHECK(side_counts(half).top == R(1, 2));

    CHECK(bipartite_density(complete(2, 3)) == Metric(R(1)));
    const auto unlinked = parse_stream("stream bipartite\nT 0 1\nside t top\nside x bottom\nN t 0 1\nN x 0 1\n");
    CHECK(bipartite_density(unlinked) == Metric(R(0)));
}

TEST_CASE("n splits into the two sides") {
    Rng rng(12);
    for (int i = 0; i < 60; ++i) {
        const auto s = random_grid_stream(rng, GridSpec{Kind::bipartite, false});
        const SideCounts c = side_counts(s);
        CHECK(c.top + c.bottom == node_count(s));
    }
}

TEST_CASE("bipartite cliques") {
    const auto s = fixture("bipartite.sg");
    CHECK(is_bipartite_clique(s, {{"u", IntervalSet::of({{1, 2}})}},
                              {{"a", IntervalSet::of({{1, 2}})}, {"c", IntervalSet::of({{1, 2}})}}));
    CHECK_FALSE(is_bipartite_clique(s, {{"u", IntervalSet::of({{0, 1}})}}, {{"b", IntervalSet::of({{0, 1}})}}));
    CHECK(is_bipartite_clique(s, {{"u", IntervalSet::of({{0, 10}})}}, {}));
    CHECK(error_of([&] { is_bipartite_clique(s, {{"a", IntervalSet::of({{0, 1}})}}, {}); }) ==
          ErrorCode::side_violation);
}

TEST_CASE("jaccard") {
    const auto s = fixture("bipartite.sg");
    const NodeIndex u = s.index("u"), v = s.index("v");
    CHECK(jaccard(s, u, v) == Metric(R(5, 23)));
    CHECK(jaccard(s, u, v, R(9, 2)) == Metric(R(2, 3)));
    CHECK(jaccard(s, u, v, R(19, 2)) == Metric(R(0)));
    const auto same = complete(2, 2);
    CHECK(jaccard(same, same.index("t0"), same.index("t1")) == Metric(R(1)));
    CHECK(error_of([&] { jaccard(s, u, s.index("a")); }) == ErrorCode::side_violation);
    CHECK(error_of([&] { jaccard(s, u, u); }) == ErrorCode::invalid_argument);
    const auto apart = parse_stream("stream bipartite\nT 0 1\nside t top\nside w top\nside x bottom\nside y bottom\n"
                                    "N t 0 1\nN w 0 1\nN x 0 1\nN y 0 1\nL t x 0 1\nL w y 0 1\n");
    CHECK(jaccard(apart, apart.index("t"), apart.index("w")) == Metric(R(0)));
}

TEST_CASE("jaccard clustering") {
    const auto twin = complete(2, 2);
    CHECK(jaccard_clustering(twin, twin.index("t0")) == Metric(R(1)));
    CHECK(exact(oracle_metric(twin, req(MetricKind::jaccard_clustering, "t0"), R(1))) == Metric(R(1)));
    const auto s = fixture("bipartite.sg");
    for (const char* v : {"u", "v", "a", "b", "c"})
        CHECK(exact(evaluate(s, req(MetricKind::jaccard_clustering, v))) ==
              exact(oracle_metric(s, req(MetricKind::jaccard_clustering, v), R(1))));
    const auto lone = parse_stream("stream bipartite\nT 0 1\nside t top\nside x bottom\nN t 0 1\nN x 0 1\nL t x 0 1\n");
    CHECK_FALSE(jaccard_clustering(lone, lone.index("t")).has_value());
}

TEST_CASE("redundancy") {
    const auto s = fixture("bipartite.sg");
    CHECK(redundancy(s, s.index("c")) == Metric(R(1, 4)));
    const auto full = complete(3, 3);
    CHECK(redundancy(full, full.index("t0")) == Metric(R(1)));
    const auto star = complete(3, 1);
    CHECK(redundancy(star, star.index("b0")) == Metric(R(0)));
    CHECK_FALSE(redundancy(star, star.index("t0")).has_value());
}

TEST_CASE("cc star") {
    const auto full = complete(3, 3);
    for (const char* v : {"t0", "b2"}) CHECK(cc_star(full, full.index(v)) == Metric(R(1)));
    const auto small = complete(2, 2);
    CHECK(exact(evaluate(small, req(MetricKind::cc_star, "t0"))) ==
          exact(oracle_metric(small, req(MetricKind::cc_star, "t0"), R(1))));
    const auto iso = parse_stream("stream bipartite\nT 0 1\nside t top\nN t 0 1\n");
    CHECK_FALSE(cc_star(iso, iso.index("t")).has_value());
}

TEST_CASE("bipartite transitivity") {
    const auto full = complete(3, 3);
    CHECK(bipartite_transitivity(full, BipartiteTransitivity::quad) == Metric(R(1)));
    CHECK(bipartite_transitivity(full, BipartiteTransitivity::quint) == Metric(R(1)));
    const auto path = parse_stream("stream bipartite\nT 0 1\nside a top\nside b bottom\nside c top\nside d bottom\n"
                                   "N a 0 1\nN b 0 1\nN c 0 1\nN d 0 1\nL a b 0 1\nL c b 0 1\nL c d 0 1\n");
    CHECK(bipartite_transitivity(path, BipartiteTransitivity::quad) == Metric(R(0)));
    CHECK_FALSE(bipartite_transitivity(complete(1, 1), BipartiteTransitivity::quad).has_value());
}

TEST_CASE("neighborhoods are cliques of the opposite projection") {
    Rng rng(21);
    for (int i = 0; i < 60; ++i) {
        const auto s = random_grid_stream(rng, GridSpec{Kind::bipartite, false});
        const auto bottom = project(s, Side::bottom, false);
        const auto top = project(s, Side::top, false);
        for (NodeIndex v = 0; v < s.node_total(); ++v)
            CHECK(is_clique(s.side(v) == Side::top ? bottom : top, neighborhood(s, s.name(v))));
    }
}

}
