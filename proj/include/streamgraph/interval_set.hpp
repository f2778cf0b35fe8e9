#pragma once

#include "streamgraph/rational.hpp"

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sg {

/// Closed interval [begin, end]; begin == end is a point of measure zero.
struct Interval {
    Rational begin;
    Rational end;

    Rational length() const { return end - begin; }
    bool contains(const Rational& t) const { return begin <= t && t <= end; }
    bool is_point() const { return begin == end; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of closed intervals in canonical form: sorted, pairwise
/// disjoint, and with touching intervals merged. Equal sets have equal
/// representations, so operator== is set equality.
class IntervalSet {
public:
    IntervalSet() = default;

    /// Throws Error(reversed_interval) if some begin > end.
    static IntervalSet normalize(std::vector<Interval> raw);
    static IntervalSet of(std::initializer_list<std::pair<Rational, Rational>> raw);
    static IntervalSet single(const Rational& begin, const Rational& end);

    const std::vector<Interval>& intervals() const { return intervals_; }
    bool empty() const { return intervals_.empty(); }
    std::size_t size() const { return intervals_.size(); }
    auto begin() const { return intervals_.begin(); }
    auto end() const { return intervals_.end(); }

    Rational measure() const;
    bool contains(const Rational& t) const;
    bool is_subset_of(const IntervalSet& other) const;

    /// Every endpoint, in order (begin and end of each interval).
    std::vector<Rational> endpoints() const;

    std::string to_string() const;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> intervals_;
};

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet unite_all(std::span<const IntervalSet> sets);

/// Expands every interval by `radius` on both sides, then clips to `clip`.
IntervalSet dilate(const IntervalSet& a, const Rational& radius, const Interval& clip);

inline Rational measure(const IntervalSet& a) { return a.measure(); }

/// Measure of a ∩ b without materialising the intersection.
Rational overlap_measure(const IntervalSet& a, const IntervalSet& b);

inline std::ostream& operator<<(std::ostream& os, const IntervalSet& a) { return os << a.to_string(); }

}  // namespace sg
