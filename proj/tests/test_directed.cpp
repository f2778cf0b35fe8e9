#include "helpers.hpp"

#include "streamgraph/directed.hpp"
#include "streamgraph/grid_oracle.hpp"
#include "streamgraph/stream_core.hpp"

#include <sstream>

using namespace sg;
using namespace sg::testing;

namespace {

StreamGraph arcs(const std::string& body) {
    return parse_stream("stream directed\nT 0 1\nN a 0 1\nN b 0 1\nN c 0 1\n" + body);
}

const char* cycle = "A a b 0 1\nA b c 0 1\nA c a 0 1\n";
const char* triangle = "A a b 0 1\nA b c 0 1\nA a c 0 1\n";

}  // namespace

TEST_SUITE("directed") {

TEST_CASE("neighborhoods and degrees") {
    const auto s = fixture("directed.sg");
    const NodeSets out = out_neighborhood(s, "a");
    REQUIRE(out.size() == 1);
    CHECK(out.at("b") == IntervalSet::of({{1, 3}}));
    const NodeSets in = in_neighborhood(s, "a");
    REQUIRE(in.size() == 2);
    CHECK(in.at("b") == IntervalSet::of({{R(5, 2), R(7, 2)}}));
    CHECK(in.at("c") == IntervalSet::of({{R(9, 2), R(15, 2)}}));
    CHECK(out_neighborhood(arcs("A a b 0 1\n"), "b").empty());
    CHECK(out_degree(s, s.index("a")) == R(1, 5));
    CHECK(in_degree(s, s.index("a")) == R(2, 5));
    CHECK(error_of([] { out_neighborhood(fixture("small.sg"), "a"); }) == ErrorCode::kind_mismatch);
}

TEST_CASE("degree sums equal m") {
    Rng rng(14);
    for (int i = 0; i < 80; ++i) {
        const auto s = random_grid_stream(rng, GridSpec{Kind::directed, false});
        Rational out, in;
        for (NodeIndex v = 0; v < s.node_total(); ++v) {
            out += out_degree(s, v);
            in += in_degree(s, v);
        }
        CHECK(out == link_count(s));
        CHECK(in == link_count(s));
    }
}

TEST_CASE("density, symmetry and loops") {
    const auto s = fixture("directed.sg");
    CHECK(directed_density(s) == Metric(R(1, 7)));
    const SymmetryStats st = symmetry_stats(s);
    CHECK(st.symmetric_fraction == Metric(R(1, 10)));
    CHECK(st.loop_fraction == Metric(R(0)));

    const auto full = parse_stream("stream directed\nT 0 1\nN a 0 1\nN b 0 1\n"
                                   "A a a 0 1\nA a b 0 1\nA b a 0 1\nA b b 0 1\n");
    CHECK(directed_density(full) == Metric(R(1)));
    CHECK(symmetry_stats(full).symmetric_fraction == Metric(R(1)));
    CHECK(symmetry_stats(full).loop_fraction == Metric(R(1)));
    CHECK(directed_density(arcs("")) == Metric(R(0)));
    CHECK_FALSE(symmetry_stats(arcs("")).symmetric_fraction.has_value());
}

TEST_CASE("symmetric loop-free density relates to the undirected density") {
    Rng rng(15);
    for (int i = 0; i < 60; ++i) {
        const auto base = random_grid_stream(rng, GridSpec{Kind::undirected, false});
        std::string text = serialize(base);
        text.replace(0, text.find('\n'), "stream directed");
        std::string extra;
        for (const auto& l : base.links())
            for (const auto& iv : l.presence)
                extra += "A " + base.name(l.to) + " " + base.name(l.from) + " " + format_number(iv.begin) + " " +
                         format_number(iv.end) + "\n";
        std::string body;
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);) body += (line.rfind("L ", 0) == 0 ? "A" + line.substr(1) : line) + "\n";
        const auto sym = parse_stream(body + extra);
        Rational pairs, self;
        for (NodeIndex u = 0; u < base.node_total(); ++u) {
            self += measure(base.presence(u));
            for (NodeIndex v = u + 1; v < base.node_total(); ++v)
                pairs += measure(intersect(base.presence(u), base.presence(v)));
        }
        const Metric und = density(undirect(sym));
        const Metric dir = directed_density(sym);
        if (und && dir) CHECK(*dir == *und * R(2) * pairs / (R(2) * pairs + self));
    }
}

TEST_CASE("directed cliques") {
    const auto s = fixture("directed.sg");
    CHECK(is_directed_clique(s, {{"a", IntervalSet::of({{R(5, 2), 3}})}, {"b", IntervalSet::of({{R(5, 2), 3}})}}));
    CHECK_FALSE(is_directed_clique(s, {{"a", IntervalSet::of({{1, 2}})}, {"b", IntervalSet::of({{1, 2}})}}));
    CHECK(is_directed_clique(s, {{"c", IntervalSet::of({{4, 9}})}}));
    CHECK(error_of([&] { is_directed_clique(s, {{"d", IntervalSet::of({{0, 9}})}}); }) == ErrorCode::not_subset);
}

TEST_CASE("cyclic and transitive clustering") {
    const auto cyc = arcs(cycle);
    const NodeIndex b = cyc.index("b");
    CHECK(directed_clustering(cyc, b, DirectedVariant::cyclic) == Metric(R(1)));
    CHECK(directed_clustering(cyc, b, DirectedVariant::transitive) == Metric(R(0)));
    const auto tri = arcs(triangle);
    CHECK(directed_clustering(tri, tri.index("b"), DirectedVariant::transitive) == Metric(R(1)));
    CHECK_FALSE(directed_clustering(cyc, b, DirectedVariant::in).has_value());
    CHECK_FALSE(directed_clustering(cyc, b, DirectedVariant::out).has_value());
}

TEST_CASE("in and out clustering") {
    const auto s = arcs("A a c 0 1\nA b c 0 1\nA a b 0 1\n");
    CHECK(directed_clustering(s, s.index("c"), DirectedVariant::in) == Metric(R(1, 2)));
    const auto both = arcs("A a c 0 1\nA b c 0 1\nA a b 0 1\nA b a 0 1\n");
    CHECK(directed_clustering(both, both.index("c"), DirectedVariant::in) == Metric(R(1)));
}

TEST_CASE("directed transitivity") {
    const auto cyc = arcs(cycle);
    CHECK(directed_transitivity(cyc, DirectedVariant::cyclic) == Metric(R(1)));
    CHECK(directed_transitivity(cyc, DirectedVariant::transitive) == Metric(R(0)));
    const auto tri = arcs(triangle);
    MetricRequest r;
    r.kind = MetricKind::directed_transitivity;
    r.dir = DirectedVariant::transitive;
    // The transitive triangle has a single open path a->b->c, closed by a->c.
    CHECK(directed_transitivity(tri, DirectedVariant::transitive) == Metric(R(1)));
    CHECK(exact(oracle_metric(tri, r, R(1))) == Metric(R(1)));
    CHECK_FALSE(directed_transitivity(arcs(""), DirectedVariant::cyclic).has_value());
    CHECK(error_of([&] { directed_transitivity(tri, DirectedVariant::in); }) == ErrorCode::invalid_argument);
}

TEST_CASE("undirect") {
    const auto s = fixture("directed.sg");
    const auto u = undirect(s);
    CHECK(u.kind() == Kind::undirected);
    CHECK(u.link_presence(u.index("a"), u.index("b")) == IntervalSet::of({{1, R(7, 2)}}));
    const auto sym = arcs("A a b 0 1/2\nA b a 0 1/2\n");
    CHECK(undirect(sym).link_presence(0, 1) == IntervalSet::of({{0, R(1, 2)}}));
    CHECK(undirect(arcs("A a a 0 1\nA c c 0 1\n")).links().empty());
}

}
