#pragma once

#include "streamgraph/metric.hpp"
#include "streamgraph/static_graph.hpp"
#include "streamgraph/stream_graph.hpp"

#include <vector>

namespace sg {

struct GridCell {
    Interval cell;
    Rational midpoint;
};

/// Uniform tiling of a horizon; the last cell is shorter when the step does
/// not divide the horizon length.
struct GridPlan {
    Rational step;
    std::vector<GridCell> cells;
};

/// Throws Error(invalid_argument) for a non-positive step and
/// Error(undefined_horizon) for a zero-length horizon.
GridPlan make_plan(const Interval& horizon, const Rational& step);

/// Brute-force evaluator: metrics as length-weighted sums of per-snapshot
/// counts at cell midpoints. Exact when every endpoint lies on the grid.
class GridOracle {
public:
    GridOracle(const StreamGraph& s, const Rational& step);

    const GridPlan& plan() const { return plan_; }

    Outcome evaluate(const MetricRequest& req) const;

private:
    struct Sample {
        Rational length;
        StaticGraph graph;
    };

    // Σ len · f(G_t).
    template <typename Fn>
    Rational integrate(Fn&& f) const;

    Rational node_time(std::string_view v) const;
    Rational degree_of(std::string_view v) const;
    Rational strength_of(std::string_view v) const;
    Metric presence_weighted_degree(std::optional<Side> side) const;

    const StreamGraph& stream_;
    GridPlan plan_;
    std::vector<Sample> samples_;
};

Outcome oracle_metric(const StreamGraph& s, const MetricRequest& req, const Rational& step);

}  // namespace sg
