// Acceptance runner: one PASS/FAIL line per criterion. Exact comparisons are
// rational equality; float renderings are compared within 1e-9.

#include "support.hpp"

#include "cli.hpp"
#include "streamgraph/bipartite.hpp"
#include "streamgraph/directed.hpp"
#include "streamgraph/grid_oracle.hpp"
#include "streamgraph/io.hpp"
#include "streamgraph/stream_core.hpp"
#include "streamgraph/weighted.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#ifndef SG_TOOL
#define SG_TOOL "sgtool"
#endif

using namespace sg;
using namespace sg::testing;

namespace {

constexpr int random_streams = 120;

class Checker {
public:
    void check(bool ok, const std::string& what) {
        ++total_;
        if (ok) return;
        ++failed_;
        if (failures_.size() < 8) failures_.push_back(what);
    }

    template <class A, class B>
    void equal(const A& got, const B& want, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << got << ", want " << want;
        check(got == want, os.str());
    }

    void exact(const Metric& got, const Rational& want, const std::string& what) {
        std::ostringstream os;
        os << what << ": got " << (got ? got->to_string() : "undefined") << ", want " << want;
        check(got && *got == want, os.str());
    }

    void outcome(const Outcome& got, const Rational& want, const std::string& what) {
        exact(got && got->exact ? Metric(*got->exact) : std::nullopt, want, what);
    }

    void result(const Result& got, const Result& want, const std::string& what) {
        check(same_result(got, want), what + ": " + got.describe() + " vs " + want.describe());
    }

    bool passed() const { return failed_ == 0 && total_ > 0; }
    int total() const { return total_; }
    int failed() const { return failed_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    int total_ = 0;
    int failed_ = 0;
    std::vector<std::string> failures_;
};

int overall_failures = 0;

void report(int id, const std::string& name, const std::function<void(Checker&)>& body,
            double max_seconds = 0) {
    Checker c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.check(false, std::string("unexpected exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (max_seconds > 0) {
        std::ostringstream os;
        os << "runtime " << secs << " s exceeds " << max_seconds << " s";
        c.check(secs < max_seconds, os.str());
    }
    const bool ok = c.passed();
    if (!ok) ++overall_failures;
    std::printf("%s %d %s (%d checks, %d failed, %.2f s)\n", ok ? "PASS" : "FAIL", id, name.c_str(), c.total(),
                c.failed(), secs);
    for (const auto& f : c.failures()) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
}

MetricRequest req(MetricKind kind, std::string node = {}) {
    MetricRequest r;
    r.kind = kind;
    r.node = std::move(node);
    return r;
}

void small_example(Checker& c) {
    const StreamGraph s = read_stream_file(data_path("small.sg"));
    struct Case {
        MetricRequest r;
        Rational want;
    };
    const std::vector<Case> cases{
        {req(MetricKind::node_count), Rational(13, 5)},  {req(MetricKind::link_count), Rational(1)},
        {req(MetricKind::degree, "a"), Rational(3, 5)},  {req(MetricKind::average_degree), Rational(31, 52)},
        {req(MetricKind::density), Rational(5, 11)},     {req(MetricKind::clustering, "b"), Rational(1, 4)},
        {req(MetricKind::transitivity), Rational(3, 8)},
    };
    for (const auto& k : cases) {
        c.outcome(evaluate(s, k.r), k.want, k.r.label() + " closed form");
        c.outcome(oracle_metric(s, k.r, Rational(1, 2)), k.want, k.r.label() + " oracle step 1/2");
    }
}

void bipartite_example(Checker& c) {
    const StreamGraph s = read_stream_file(data_path("bipartite.sg"));
    const SideCounts counts = side_counts(s);
    c.equal(counts.top, Rational(2), "n_top");
    c.equal(counts.bottom, Rational(3), "n_bottom");
    c.equal(link_count(s), Rational(14, 5), "m");
    c.exact(bipartite_density(s), Rational(7, 15), "bipartite density");
    c.exact(side_average_degree(s, Side::top), Rational(7, 5), "d_top");
    c.exact(jaccard(s, s.index("u"), s.index("v")), Rational(5, 23), "jaccard(u,v)");
    c.exact(redundancy(s, s.index("c")), Rational(1, 4), "rc(c)");

    const StreamGraph bottom = project(s, Side::bottom, false);
    c.equal(bottom.links().size(), std::size_t{3}, "S_bottom link count");
    auto presence = [&](const StreamGraph& p, const char* u, const char* v) {
        return p.link_presence(p.index(u), p.index(v));
    };
    c.equal(presence(bottom, "a", "b"), IntervalSet::of({{4, 5}, {8, 9}}), "S_bottom a-b");
    c.equal(presence(bottom, "a", "c"), IntervalSet::of({{1, 2}, {3, 5}}), "S_bottom a-c");
    c.equal(presence(bottom, "b", "c"), IntervalSet::of({{2, 7}}), "S_bottom b-c");

    const StreamGraph weighted = project(s, Side::bottom, true);
    const Link* bc = weighted.find_link(weighted.index("b"), weighted.index("c"));
    c.check(bc != nullptr, "weighted projection has b-c");
    if (bc) {
        const StepWeight want = StepWeight::from_pieces(
            {{{Rational(2), Rational(4)}, Rational(1)}, {{Rational(4), Rational(5)}, Rational(2)},
             {{Rational(5), Rational(7)}, Rational(1)}});
        c.check(bc->weight == want, "weighted b-c is 1 on [2,4], 2 on [4,5], 1 on [5,7]");
    }
}

void directed_example(Checker& c) {
    const StreamGraph s = read_stream_file(data_path("directed.sg"));
    const NodeIndex a = s.index("a");
    c.equal(out_degree(s, a), Rational(1, 5), "d+(a)");
    c.equal(in_degree(s, a), Rational(2, 5), "d-(a)");
    c.equal(link_count(s), Rational(1), "m");
    c.exact(directed_density(s), Rational(1, 7), "directed density");
    c.exact(symmetry_stats(s).symmetric_fraction, Rational(1, 10), "symmetric fraction");
    Rational out_sum, in_sum;
    for (NodeIndex v = 0; v < s.node_total(); ++v) {
        out_sum += out_degree(s, v);
        in_sum += in_degree(s, v);
    }
    c.equal(out_sum, link_count(s), "sum d+ = m");
    c.equal(in_sum, link_count(s), "sum d- = m");
}

void graph_equivalence(Checker& c) {
    Rng rng(20240611);
    struct Family {
        Kind kind;
        bool weighted;
        const char* name;
    };
    for (const Family f : {Family{Kind::undirected, false, "undirected"}, Family{Kind::undirected, true, "weighted"},
                           Family{Kind::bipartite, false, "bipartite"}, Family{Kind::directed, false, "directed"}}) {
        for (int i = 0; i < random_streams; ++i) {
            const StreamGraph s = random_graph_equivalent(rng, f.kind, f.weighted, 8);
            c.check(is_graph_equivalent(s), std::string(f.name) + " generator produced a dynamic stream");
            const StaticGraph g = s.weighted() ? weighted_induced_graph(s) : induced_graph(s);
            for (const auto& r : all_requests(s)) {
                const Result stream = capture([&] { return evaluate(s, r); });
                const Result graph = capture([&] { return graph_metric(g, r); });
                c.result(stream, graph,
                         std::string(f.name) + " #" + std::to_string(i) + " " + r.label() + " " + r.node + " " + r.other);
            }
        }
    }
}

void oracle_suite(Checker& c) {
    Rng rng(7031);
    struct Family {
        GridSpec spec;
        const char* name;
    };
    std::vector<Family> families;
    families.push_back({GridSpec{Kind::undirected, false}, "undirected"});
    families.push_back({GridSpec{Kind::undirected, true}, "weighted"});
    families.push_back({GridSpec{Kind::bipartite, false}, "bipartite"});
    families.push_back({GridSpec{Kind::directed, false}, "directed"});
    for (Kind kind : {Kind::undirected, Kind::bipartite, Kind::directed}) {
        GridSpec dense{kind, kind == Kind::undirected};
        dense.dense = true;
        dense.min_nodes = 4;
        families.push_back({dense, "dense"});
    }
    for (const auto& f : families) {
        for (int i = 0; i < random_streams; ++i) {
            const StreamGraph s = random_grid_stream(rng, f.spec);
            GridOracle oracle(s, f.spec.step);
            for (const auto& r : all_requests(s)) {
                const Result closed = capture([&] { return evaluate(s, r); });
                const Result brute = capture([&] { return oracle.evaluate(r); });
                c.result(closed, brute,
                         std::string(f.name) + " #" + std::to_string(i) + " " + r.label() + " " + r.node + " " + r.other);
            }
        }
    }
}

void reductions(Checker& c) {
    Rng rng(99);
    for (int i = 0; i < random_streams; ++i) {
        // Same stream twice: as unweighted, and flagged weighted with unit weights.
        const StreamGraph plain = random_grid_stream(rng, GridSpec{Kind::undirected, false});
        const std::string text = serialize(plain);
        const StreamGraph unit = parse_stream("stream undirected weighted\n" + text.substr(text.find('\n') + 1));
        c.check(unit.weighted(), "unit-weight copy is weighted");
        const Result tr = capture([&] { return to_outcome(transitivity(plain)); });
        for (ValueFn fn : {ValueFn::arith_mean, ValueFn::geo_mean, ValueFn::min, ValueFn::max, ValueFn::product})
            c.result(capture([&] { return weighted_transitivity(unit, fn); }), tr,
                     "weighted transitivity " + std::string(to_string(fn)) + " vs plain #" + std::to_string(i));
        for (NodeIndex v = 0; v < unit.node_total(); ++v)
            c.equal(strength(unit, v), degree(plain, v), "strength = degree #" + std::to_string(i));
    }

    const std::vector<Rational> taus{Rational(0), Rational(1, 2), Rational(1), Rational(5, 4), Rational(3, 2),
                                     Rational(2), Rational(5, 2), Rational(3), Rational(4)};
    for (int i = 0; i < random_streams; ++i) {
        GridSpec spec{Kind::undirected, true};
        spec.node_weights = true;
        const StreamGraph s = random_grid_stream(rng, spec);
        std::optional<StreamGraph> prev;
        for (const auto& tau : taus) {
            StreamGraph cur = threshold(s, tau);
            if (prev) {
                for (NodeIndex v = 0; v < cur.node_total(); ++v)
                    c.check(cur.presence(v).is_subset_of(prev->presence(v)),
                            "threshold node monotonicity #" + std::to_string(i));
                for (const auto& l : cur.links())
                    c.check(l.presence.is_subset_of(prev->link_presence(l.from, l.to)),
                            "threshold link monotonicity #" + std::to_string(i));
            }
            prev = std::move(cur);
        }
    }

    std::vector<StreamGraph> bipartite{read_stream_file(data_path("bipartite.sg"))};
    for (int i = 0; i < random_streams; ++i) bipartite.push_back(random_grid_stream(rng, GridSpec{Kind::bipartite, false}));
    for (const auto& s : bipartite) {
        for (Side side : {Side::top, Side::bottom}) {
            const StreamGraph proj = project(s, side == Side::top ? Side::bottom : Side::top, false);
            for (NodeIndex v = 0; v < s.node_total(); ++v)
                if (s.side(v) == side)
                    c.check(is_clique(proj, neighborhood(s, s.name(v))),
                            "N(" + s.name(v) + ") is a clique of the opposite projection");
        }
    }
}

void round_trip(Checker& c) {
    std::vector<StreamGraph> streams;
    for (const char* f : {"small.sg", "bipartite.sg", "directed.sg"}) streams.push_back(read_stream_file(data_path(f)));
    Rng rng(31337);
    for (int i = 0; i < random_streams; ++i) {
        GridSpec spec;
        spec.kind = std::array{Kind::undirected, Kind::bipartite, Kind::directed}[i % 3];
        spec.weighted = i % 2 == 0;
        spec.node_weights = i % 4 == 0;
        spec.points = true;
        spec.step = Rational(1, 3);
        streams.push_back(random_grid_stream(rng, spec));
    }
    for (std::size_t i = 0; i < streams.size(); ++i) {
        const std::string text = serialize(streams[i]);
        c.check(parse_stream(text) == streams[i], "parse(serialize(S)) == S for stream #" + std::to_string(i));
        c.check(serialize(parse_stream(text)) == text, "serialize is stable for stream #" + std::to_string(i));
    }

    const std::vector<std::vector<std::string>> commands{
        {"stats", data_path("small.sg")},
        {"cc", data_path("small.sg")},
        {"transitivity", data_path("bipartite.sg"), "--variant", "quint"},
        {"degree", data_path("directed.sg")},
        {"project", data_path("bipartite.sg"), "--side", "bottom", "--weighted"},
        {"delta", data_path("small.sg"), "--delta", "2", "--resolution", "1/2"},
        {"induced", data_path("directed.sg")},
        {"oracle", data_path("small.sg"), "--metric", "density", "--step", "1/2"},
        {"cc", data_path("small.sg"), "--variant", "geo"},
    };
    for (const auto& cmd : commands) {
        std::vector<std::string> args{"sgtool"};
        args.insert(args.end(), cmd.begin(), cmd.end());
        std::string joined;
        for (const auto& a : cmd) joined += " " + a;

        std::ostringstream out1, out2, err;
        const int rc1 = cli::run(args, out1, err);
        const int rc2 = cli::run(args, out2, err);
        c.check(rc1 == rc2 && out1.str() == out2.str() && !out1.str().empty(), "in-process determinism:" + joined);

        std::string outputs[2];
        for (auto& o : outputs) {
            FILE* pipe = popen((std::string(SG_TOOL) + joined).c_str(), "r");
            if (!pipe) break;
            char buf[4096];
            std::size_t n;
            while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) o.append(buf, n);
            pclose(pipe);
        }
        c.check(outputs[0] == outputs[1] && outputs[0] == out1.str(), "process determinism:" + joined);
    }
}

void delta_check(Checker& c) {
    const StreamGraph s = parse_stream("stream undirected\nT 0 10\nN v 2 3\n");
    const StreamGraph d = delta_analysis(s, Rational(2), Rational(1));
    c.check(d.horizon() == Interval{Rational(1), Rational(9)}, "T' = [1,9]");
    const NodeIndex v = d.index("v");
    c.equal(d.presence(v), IntervalSet::of({{1, 4}}), "T'_v");
    const StepWeight* w = d.node_weight(v);
    c.check(w != nullptr, "node weight present");
    if (w) {
        const StepWeight want = StepWeight::from_pieces({{{Rational(1), Rational(2)}, Rational(1, 2)},
                                                         {{Rational(2), Rational(3)}, Rational(1)},
                                                         {{Rational(3), Rational(4)}, Rational(1, 2)}});
        c.check(*w == want, "weights 1/2, 1, 1/2 on [1,2], [2,3], [3,4]");
        const StreamGraph fine = delta_analysis(s, Rational(2), Rational(1, 4));
        const Rational coarse_int = w->integrate();
        const Rational fine_int = fine.node_weight(fine.index("v"))->integrate();
        c.check((coarse_int - fine_int).abs() <= Rational(1, 4), "refining to 1/4 changes the integral by at most 1/4");
    }
}

}  // namespace

int main() {
    report(1, "small example: closed form and grid oracle", small_example, 1.0);
    report(2, "bipartite example: bipartite metrics and projections", bipartite_example);
    report(3, "directed example: directed metrics", directed_example);
    report(4, "graph-equivalent streams match graph metrics", graph_equivalence);
    report(5, "grid-aligned streams match the grid oracle", oracle_suite);
    report(6, "reductions, threshold monotonicity, projection cliques", reductions);
    report(7, "round trip and CLI determinism", round_trip);
    report(8, "delta analysis", delta_check);
    return overall_failures == 0 ? 0 : 1;
}
