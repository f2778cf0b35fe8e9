#pragma once

#include "streamgraph/interval_set.hpp"
#include "streamgraph/rational.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace sg {

struct WeightPiece {
    Interval interval;
    Rational value;

    friend bool operator==(const WeightPiece&, const WeightPiece&) = default;
};

/// Piecewise-constant weight over a finite union of closed intervals.
///
/// Pieces are sorted and may share endpoints but never overlap beyond one.
/// At a shared endpoint the left piece owns the value. Touching pieces with
/// equal values are merged so the representation is canonical.
class StepWeight {
public:
    StepWeight() = default;

    /// Overlapping pieces with equal values are merged; overlapping pieces
    /// with different values throw Error(weight_support).
    static StepWeight from_pieces(std::vector<WeightPiece> pieces);
    static StepWeight constant(const IntervalSet& support, const Rational& value);

    const std::vector<WeightPiece>& pieces() const { return pieces_; }
    bool empty() const { return pieces_.empty(); }

    IntervalSet support() const;

    /// Value at t, or nullopt outside the support.
    std::optional<Rational> value_at(const Rational& t) const;

    /// Integral of the weight over `over` (zero outside the support).
    Rational integrate(const IntervalSet& over) const;
    Rational integrate() const;

    /// Points of the support where the weight is >= tau.
    IntervalSet at_least(const Rational& tau) const;

    std::optional<Rational> min_value() const;
    std::optional<Rational> max_value() const;
    bool is_constant() const;

    friend bool operator==(const StepWeight&, const StepWeight&) = default;

private:
    std::vector<WeightPiece> pieces_;
};

/// Pointwise combination over the common support. Only positive-length
/// overlaps are kept, so the result's support matches a ∩ b up to a null set;
/// intended for integration.
StepWeight combine(const StepWeight& a, const StepWeight& b,
                   const std::function<Rational(const Rational&, const Rational&)>& fn);

StepWeight multiply(const StepWeight& a, const StepWeight& b);

/// Sum of indicator functions: the count of sets containing t, with support
/// equal to the union of the sets.
StepWeight count_cover(std::span<const IntervalSet> sets);

}  // namespace sg
