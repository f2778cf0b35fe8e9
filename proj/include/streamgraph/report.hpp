#pragma once

#include "streamgraph/static_graph.hpp"
#include "streamgraph/value.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace sg {

using Json = nlohmann::ordered_json;

/// Float rendering: 12 significant digits, ties to even.
double render_float(const Rational& r);
double render_float(double d);

/// Adds "exact" and "float" fields. Undefined values give "exact":"undefined"
/// and "float":null; inexact values give "exact":null.
void put_value(Json& j, const Outcome& v);

/// {"metric":..., "scope":..., [extra fields], "exact":..., "float":...}
Json metric_report(std::string_view metric, std::string_view scope, const Outcome& v, const Json& extra = Json::object());

/// Nodes and edges with exact weights.
Json graph_json(const StaticGraph& g);

}  // namespace sg
