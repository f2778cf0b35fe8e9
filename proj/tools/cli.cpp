#include "cli.hpp"

#include "streamgraph/bipartite.hpp"
#include "streamgraph/error.hpp"
#include "streamgraph/grid_oracle.hpp"
#include "streamgraph/io.hpp"
#include "streamgraph/metric.hpp"
#include "streamgraph/report.hpp"
#include "streamgraph/stream_core.hpp"
#include "streamgraph/weighted.hpp"

#include "CLI11.hpp"

#include <functional>

namespace sg::cli {

namespace {

struct Options {
    std::string file;
    std::string node;
    std::string with;
    std::string variant;
    std::string direction;
    std::string side;
    std::string tau;
    std::string delta;
    std::string resolution;
    std::string t;
    std::string at;
    std::string metric;
    std::string step;
    std::string alpha;
    bool weighted = false;
};

Rational number_arg(const std::string& text, std::string_view flag) {
    try {
        return Rational::parse(text);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorCode::invalid_argument, "--" + std::string(flag) + " expects a number, got '" + text + "'");
    }
}

Side side_arg(const std::string& text) {
    if (auto s = parse_side(text)) return *s;
    throw Error(ErrorCode::invalid_argument, "--side expects top or bottom, got '" + text + "'");
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

std::vector<std::string> nodes_for(const StreamGraph& s, const std::string& node) {
    if (!node.empty()) {
        s.index(node);
        return {node};
    }
    return s.names();
}

// One node: a single report, exit 1 when undefined. All nodes: a listing.
int node_metric(std::ostream& out, const StreamGraph& s, MetricRequest req, const std::string& node) {
    if (!node.empty()) {
        req.node = node;
        const Outcome v = evaluate(s, req);
        emit(out, metric_report(req.label(), "node", v, Json{{"node", node}}));
        return v ? ok : undefined;
    }
    check_applicable(req, s.kind());
    Json values = Json::array();
    for (const auto& name : s.names()) {
        req.node = name;
        Json entry{{"node", name}};
        put_value(entry, evaluate(s, req));
        values.push_back(std::move(entry));
    }
    emit(out, Json{{"metric", req.label()}, {"scope", "node"}, {"values", std::move(values)}});
    return ok;
}

int global_metric(std::ostream& out, const StreamGraph& s, const MetricRequest& req) {
    const Outcome v = evaluate(s, req);
    emit(out, metric_report(req.label(), "global", v));
    return v ? ok : undefined;
}

MetricRequest request(MetricKind kind) {
    MetricRequest r;
    r.kind = kind;
    return r;
}

// Maps a --variant value to a clustering request for the stream's kind.
MetricRequest clustering_request(const StreamGraph& s, const std::string& variant) {
    std::string v = variant;
    if (v.empty()) v = s.directed() ? "cyclic" : "plain";
    if (v == "plain") return request(MetricKind::clustering);
    if (v == "barrat") return request(MetricKind::barrat);
    if (auto fn = parse_value_fn(v)) {
        MetricRequest r = request(MetricKind::weighted_clustering);
        r.fn = *fn;
        return r;
    }
    if (v == "jaccard") return request(MetricKind::jaccard_clustering);
    if (v == "redundancy") return request(MetricKind::redundancy);
    if (v == "ccstar") return request(MetricKind::cc_star);
    if (auto d = parse_directed_variant(v)) {
        MetricRequest r = request(MetricKind::directed_clustering);
        r.dir = *d;
        return r;
    }
    throw Error(ErrorCode::invalid_argument, "unknown clustering variant '" + v + "'");
}

MetricRequest transitivity_request(const StreamGraph& s, const std::string& variant) {
    std::string v = variant;
    if (v.empty()) v = s.directed() ? "cyclic" : "plain";
    if (v == "plain") return request(MetricKind::transitivity);
    if (auto fn = parse_value_fn(v)) {
        MetricRequest r = request(MetricKind::weighted_transitivity);
        r.fn = *fn;
        return r;
    }
    if (auto b = parse_bipartite_transitivity(v)) {
        MetricRequest r = request(MetricKind::bipartite_transitivity);
        r.btr = *b;
        return r;
    }
    if (v == "cyclic" || v == "transitive") {
        MetricRequest r = request(MetricKind::directed_transitivity);
        r.dir = *parse_directed_variant(v);
        return r;
    }
    throw Error(ErrorCode::invalid_argument, "unknown transitivity variant '" + v + "'");
}

// Applies --variant to a request built from a metric name (oracle command).
void apply_variant(MetricRequest& r, const std::string& v) {
    if (v.empty()) return;
    bool used = false;
    switch (r.kind) {
        case MetricKind::weighted_clustering:
        case MetricKind::weighted_transitivity:
            if (auto fn = parse_value_fn(v)) r.fn = *fn, used = true;
            break;
        case MetricKind::weighted_density:
            if (auto d = parse_density_variant(v)) r.density = *d, used = true;
            break;
        case MetricKind::bipartite_transitivity:
            if (auto b = parse_bipartite_transitivity(v)) r.btr = *b, used = true;
            break;
        case MetricKind::directed_clustering:
        case MetricKind::directed_transitivity:
            if (auto d = parse_directed_variant(v)) r.dir = *d, used = true;
            break;
        default: break;
    }
    if (!used)
        throw Error(ErrorCode::invalid_argument,
                    "variant '" + v + "' does not apply to " + std::string(to_string(r.kind)));
}

int cmd_stats(std::ostream& out, const StreamGraph& s) {
    std::vector<MetricRequest> reqs{request(MetricKind::node_count), request(MetricKind::link_count)};
    switch (s.kind()) {
        case Kind::undirected:
            reqs.push_back(request(MetricKind::density));
            reqs.push_back(request(MetricKind::average_degree));
            break;
        case Kind::bipartite:
            for (Side side : {Side::top, Side::bottom}) {
                MetricRequest r = request(MetricKind::side_count);
                r.side = side;
                reqs.push_back(r);
            }
            reqs.push_back(request(MetricKind::bipartite_density));
            reqs.push_back(request(MetricKind::average_degree));
            for (Side side : {Side::top, Side::bottom}) {
                MetricRequest r = request(MetricKind::side_average_degree);
                r.side = side;
                reqs.push_back(r);
            }
            break;
        case Kind::directed:
            reqs.push_back(request(MetricKind::directed_density));
            reqs.push_back(request(MetricKind::symmetric_fraction));
            reqs.push_back(request(MetricKind::loop_fraction));
            break;
    }
    Json metrics = Json::array();
    for (const auto& r : reqs) metrics.push_back(metric_report(r.label(), "global", evaluate(s, r)));
    Json j{{"kind", to_string(s.kind())}, {"weighted", s.weighted()}, {"metrics", std::move(metrics)}};
    if (s.weighted()) {
        bool has_links = false;
        for (const auto& l : s.links()) has_links = has_links || !l.weight.empty();
        if (has_links) {
            const WeightStats w = weight_stats(s);
            Json stats{{"min", w.min.to_string()}, {"max", w.max.to_string()}};
            stats["mean"] = w.mean ? Json(w.mean->to_string()) : Json("undefined");
            j["weights"] = std::move(stats);
        }
    }
    emit(out, j);
    return ok;
}

int cmd_degree(std::ostream& out, const StreamGraph& s, const Options& o) {
    if (!s.directed()) {
        if (!o.direction.empty())
            throw Error(ErrorCode::kind_mismatch, "--direction requires a directed stream");
        return node_metric(out, s, request(MetricKind::degree), o.node);
    }
    if (o.direction == "out") return node_metric(out, s, request(MetricKind::out_degree), o.node);
    if (o.direction == "in") return node_metric(out, s, request(MetricKind::in_degree), o.node);
    if (!o.direction.empty()) throw Error(ErrorCode::invalid_argument, "--direction expects out or in");
    Json values = Json::array();
    for (const auto& name : nodes_for(s, o.node)) {
        Json entry{{"node", name}};
        for (auto [key, kind] : {std::pair{"out", MetricKind::out_degree}, std::pair{"in", MetricKind::in_degree}}) {
            MetricRequest r = request(kind);
            r.node = name;
            Json v;
            put_value(v, evaluate(s, r));
            entry[key] = std::move(v);
        }
        values.push_back(std::move(entry));
    }
    emit(out, Json{{"metric", "degree"}, {"scope", "node"}, {"values", std::move(values)}});
    return ok;
}

int cmd_density(std::ostream& out, const StreamGraph& s, const Options& o) {
    std::string v = o.variant;
    if (v.empty() || v == "auto")
        v = s.kind() == Kind::bipartite ? "bipartite" : (s.directed() ? "directed" : "plain");
    if (v == "plain") return global_metric(out, s, request(MetricKind::density));
    if (v == "bipartite") return global_metric(out, s, request(MetricKind::bipartite_density));
    if (v == "directed") return global_metric(out, s, request(MetricKind::directed_density));
    throw Error(ErrorCode::invalid_argument, "unknown density variant '" + v + "'");
}

int cmd_cc(std::ostream& out, const StreamGraph& s, const Options& o) {
    if (!o.with.empty()) {
        if (o.node.empty()) throw Error(ErrorCode::invalid_argument, "--with needs --node");
        MetricRequest r = request(MetricKind::jaccard);
        r.node = o.node;
        r.other = o.with;
        if (!o.at.empty()) r.at = number_arg(o.at, "at");
        const Outcome v = evaluate(s, r);
        Json extra{{"node", o.node}, {"other", o.with}};
        if (r.at) extra["at"] = format_number(*r.at);
        emit(out, metric_report(r.label(), "pair", v, extra));
        return v ? ok : undefined;
    }
    if (!o.at.empty()) throw Error(ErrorCode::invalid_argument, "--at only applies with --with");
    return node_metric(out, s, clustering_request(s, o.variant), o.node);
}

int cmd_strength(std::ostream& out, const StreamGraph& s, const Options& o) {
    if (o.alpha.empty()) return node_metric(out, s, request(MetricKind::strength), o.node);
    MetricRequest r = request(MetricKind::degree_strength);
    r.alpha = number_arg(o.alpha, "alpha");
    return node_metric(out, s, r, o.node);
}

int cmd_wdensity(std::ostream& out, const StreamGraph& s, const Options& o) {
    MetricRequest r = request(MetricKind::weighted_density);
    if (!o.variant.empty()) {
        auto d = parse_density_variant(o.variant);
        if (!d) throw Error(ErrorCode::invalid_argument, "unknown weighted density variant '" + o.variant + "'");
        r.density = *d;
    }
    return global_metric(out, s, r);
}

int cmd_oracle(std::ostream& out, const StreamGraph& s, const Options& o) {
    auto kind = parse_metric_kind(o.metric);
    if (!kind) throw Error(ErrorCode::invalid_argument, "unknown metric '" + o.metric + "'");
    MetricRequest r = request(*kind);
    apply_variant(r, o.variant);
    r.node = o.node;
    r.other = o.with;
    if (!o.side.empty()) r.side = side_arg(o.side);
    if (!o.alpha.empty()) r.alpha = number_arg(o.alpha, "alpha");
    if (!o.at.empty()) r.at = number_arg(o.at, "at");
    if (scope_of(r.kind) != Scope::global && r.node.empty())
        throw Error(ErrorCode::invalid_argument, std::string(to_string(r.kind)) + " needs --node");
    if (scope_of(r.kind) == Scope::pair && r.other.empty())
        throw Error(ErrorCode::invalid_argument, "jaccard needs --with");
    const Rational step = number_arg(o.step, "step");
    const Outcome v = GridOracle(s, step).evaluate(r);
    const Outcome closed = evaluate(s, r);
    Json extra{{"step", format_number(step)}};
    if (!r.node.empty()) extra["node"] = r.node;
    if (!r.other.empty()) extra["other"] = r.other;
    Json j = metric_report(r.label(), to_string(scope_of(r.kind)), v, extra);
    Json cf;
    put_value(cf, closed);
    j["closed_form"] = std::move(cf);
    j["agrees"] = same_outcome(v, closed);
    emit(out, j);
    return v ? ok : undefined;
}

int cmd_validate(std::ostream& out, const Options& o) {
    try {
        const StreamGraph s = read_stream_file(o.file);
        Json j{{"valid", true},
               {"kind", to_string(s.kind())},
               {"weighted", s.weighted()},
               {"horizon", Json::array({format_number(s.horizon().begin), format_number(s.horizon().end)})},
               {"nodes", s.node_total()},
               {"links", s.links().size()},
               {"graph_equivalent", is_graph_equivalent(s)}};
        emit(out, j);
        return ok;
    } catch (const Error& e) {
        Json j{{"valid", false}, {"error", to_string(e.code())}, {"message", e.what()}};
        if (e.line()) j["line"] = e.line();
        emit(out, j);
        return input_error;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact metrics for weighted, bipartite and directed stream graphs", "streamgraph"};
    app.require_subcommand(1);
    Options o;
    std::function<int(const StreamGraph&)> action;
    bool validate_only = false;

    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("file", o.file, "stream file")->required();
        return sub;
    };

    auto* stats = add("stats", "global counts and densities");
    stats->callback([&] { action = [&](const StreamGraph& s) { return cmd_stats(out, s); }; });

    auto* degree = add("degree", "node degrees");
    degree->add_option("--node", o.node, "single node");
    degree->add_option("--direction", o.direction, "out or in (directed streams)");
    degree->callback([&] { action = [&](const StreamGraph& s) { return cmd_degree(out, s, o); }; });

    auto* density = add("density", "stream density");
    density->add_option("--variant", o.variant, "auto, plain, bipartite or directed");
    density->callback([&] { action = [&](const StreamGraph& s) { return cmd_density(out, s, o); }; });

    auto* cc = add("cc", "clustering coefficients");
    cc->add_option("--node", o.node, "single node");
    cc->add_option("--variant", o.variant,
                   "plain|barrat|product|arith|geo|min|max|jaccard|redundancy|ccstar|cyclic|transitive|in|out");
    cc->add_option("--with", o.with, "pair Jaccard coefficient with this node");
    cc->add_option("--at", o.at, "instant for the pair Jaccard coefficient");
    cc->callback([&] { action = [&](const StreamGraph& s) { return cmd_cc(out, s, o); }; });

    auto* tr = add("transitivity", "global transitivity");
    tr->add_option("--variant", o.variant, "plain|product|arith|geo|min|max|quad|quint|cyclic|transitive");
    tr->callback([&] {
        action = [&](const StreamGraph& s) { return global_metric(out, s, transitivity_request(s, o.variant)); };
    });

    auto* strength = add("strength", "node strengths");
    strength->add_option("--node", o.node, "single node");
    strength->add_option("--alpha", o.alpha, "degree-strength combination exponent");
    strength->callback([&] { action = [&](const StreamGraph& s) { return cmd_strength(out, s, o); }; });

    auto* wdensity = add("wdensity", "weighted density");
    wdensity->add_option("--variant", o.variant, "present_max, all_max or unit_interval");
    wdensity->callback([&] { action = [&](const StreamGraph& s) { return cmd_wdensity(out, s, o); }; });

    auto* thr = add("threshold", "thresholded stream S_tau");
    thr->add_option("--tau", o.tau, "threshold")->required();
    thr->callback([&] {
        action = [&](const StreamGraph& s) {
            out << serialize(threshold(s, number_arg(o.tau, "tau")));
            return int(ok);
        };
    });

    auto* delta = add("delta", "delta-analysis of an unweighted stream");
    delta->add_option("--delta", o.delta, "window width")->required();
    delta->add_option("--resolution", o.resolution, "step of the weight grid")->required();
    delta->callback([&] {
        action = [&](const StreamGraph& s) {
            out << serialize(delta_analysis(s, number_arg(o.delta, "delta"), number_arg(o.resolution, "resolution")));
            return int(ok);
        };
    });

    auto* project = add("project", "one-mode projection of a bipartite stream");
    project->add_option("--side", o.side, "top or bottom")->required();
    project->add_flag("--weighted", o.weighted, "count shared neighbors");
    project->callback([&] {
        action = [&](const StreamGraph& s) {
            out << serialize(sg::project(s, side_arg(o.side), o.weighted));
            return int(ok);
        };
    });

    auto* snap = add("snapshot", "graph at one instant");
    snap->add_option("--t", o.t, "instant")->required();
    snap->callback([&] {
        action = [&](const StreamGraph& s) {
            emit(out, graph_json(snapshot(s, number_arg(o.t, "t"))));
            return int(ok);
        };
    });

    auto* induced = add("induced", "induced graph G(S)");
    induced->add_flag("--weighted", o.weighted, "time-averaged weights (default for weighted streams)");
    induced->callback([&] {
        action = [&](const StreamGraph& s) {
            emit(out, graph_json(o.weighted || s.weighted() ? weighted_induced_graph(s) : induced_graph(s)));
            return int(ok);
        };
    });

    auto* oracle = add("oracle", "grid oracle evaluation of one metric");
    oracle->add_option("--metric", o.metric, "metric name, e.g. density or clustering")->required();
    oracle->add_option("--step", o.step, "grid step")->required();
    oracle->add_option("--node", o.node, "node for node metrics");
    oracle->add_option("--with", o.with, "second node for jaccard");
    oracle->add_option("--variant", o.variant, "metric variant");
    oracle->add_option("--side", o.side, "top or bottom");
    oracle->add_option("--alpha", o.alpha, "degree-strength exponent");
    oracle->add_option("--at", o.at, "instant for jaccard");
    oracle->callback([&] { action = [&](const StreamGraph& s) { return cmd_oracle(out, s, o); }; });

    auto* validate = add("validate", "check a stream file");
    validate->callback([&] { validate_only = true; });

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    if (validate_only) return cmd_validate(out, o);
    try {
        const StreamGraph s = read_stream_file(o.file);
        return action(s);
    } catch (const Error& e) {
        err << "error: " << to_string(e.code());
        if (e.line()) err << " (line " << e.line() << ")";
        err << ": " << e.what() << '\n';
        return input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }
}

}  // namespace sg::cli
