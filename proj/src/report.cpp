#include "streamgraph/report.hpp"

#include <cmath>
#include <string>

namespace sg {

double render_float(const Rational& r) { return std::stod(r.round_significant(12)); }

double render_float(double d) {
    if (!std::isfinite(d)) return d;
    return render_float(Rational::from_double(d));
}

void put_value(Json& j, const Outcome& v) {
    if (!v) {
        j["exact"] = "undefined";
        j["float"] = nullptr;
        return;
    }
    if (v->exact) {
        j["exact"] = v->exact->to_string();
        j["float"] = render_float(*v->exact);
    } else {
        j["exact"] = nullptr;
        j["float"] = render_float(v->approx);
    }
}

Json metric_report(std::string_view metric, std::string_view scope, const Outcome& v, const Json& extra) {
    Json j;
    j["metric"] = metric;
    j["scope"] = scope;
    for (const auto& [key, value] : extra.items()) j[key] = value;
    put_value(j, v);
    return j;
}

Json graph_json(const StaticGraph& g) {
    Json j;
    j["kind"] = to_string(g.kind());
    j["weighted"] = g.weighted();
    Json nodes = Json::array();
    for (const auto& n : g.nodes()) {
        Json node;
        node["id"] = n.name;
        if (n.side) node["side"] = to_string(*n.side);
        if (n.weight) node["weight"] = n.weight->to_string();
        nodes.push_back(std::move(node));
    }
    j["nodes"] = std::move(nodes);
    Json edges = Json::array();
    for (const auto& e : g.edges()) {
        Json edge;
        edge["from"] = e.from;
        edge["to"] = e.to;
        if (g.weighted()) edge["weight"] = e.weight.to_string();
        if (e.min_weight) edge["min_weight"] = e.min_weight->to_string();
        if (e.max_weight) edge["max_weight"] = e.max_weight->to_string();
        edges.push_back(std::move(edge));
    }
    j["edges"] = std::move(edges);
    return j;
}

}  // namespace sg
