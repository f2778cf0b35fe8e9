#pragma once

#include "streamgraph/error.hpp"
#include "streamgraph/metric.hpp"
#include "streamgraph/stream_graph.hpp"

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace sg::testing {

using Rng = std::mt19937_64;

std::string data_path(const std::string& name);

struct GridSpec {
    Kind kind = Kind::undirected;
    bool weighted = false;
    bool node_weights = false;
    int max_nodes = 6;
    int min_nodes = 1;
    bool dense = false;      // long presences and many links
    Rational step{1, 4};
    Rational max_horizon{10};
    bool loops = true;       // directed only
    bool points = false;     // allow point presence intervals
};

/// Random stream whose endpoints are multiples of spec.step.
StreamGraph random_grid_stream(Rng& rng, const GridSpec& spec);

/// Random stream with no dynamics: every node present on all of T, every
/// link present on all of T or never, constant weights.
StreamGraph random_graph_equivalent(Rng& rng, Kind kind, bool weighted, int max_nodes = 8);

/// Every applicable request for the stream: all metrics, variants, nodes and pairs.
std::vector<MetricRequest> all_requests(const StreamGraph& s);

/// Either a value or the error code thrown while computing it.
struct Result {
    Outcome value;
    std::optional<ErrorCode> error;
    std::string describe() const;
};

Result capture(const std::function<Outcome()>& f);

/// Same outcome (exact equality, or 1e-9 for floats) or same error code.
bool same_result(const Result& a, const Result& b);

}  // namespace sg::testing
