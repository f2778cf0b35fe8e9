#include "streamgraph/interval_set.hpp"

#include "streamgraph/error.hpp"

#include <algorithm>

namespace sg {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::syntax: return "syntax";
        case ErrorCode::reversed_interval: return "reversed_interval";
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::unknown_node: return "unknown_node";
        case ErrorCode::duplicate_node: return "duplicate_node";
        case ErrorCode::side_violation: return "side_violation";
        case ErrorCode::self_loop: return "self_loop";
        case ErrorCode::containment: return "containment";
        case ErrorCode::weight_support: return "weight_support";
        case ErrorCode::kind_mismatch: return "kind_mismatch";
        case ErrorCode::undefined_horizon: return "undefined_horizon";
        case ErrorCode::not_subset: return "not_subset";
        case ErrorCode::unweighted: return "unweighted";
    }
    return "unknown";
}

IntervalSet IntervalSet::normalize(std::vector<Interval> raw) {
    for (const auto& iv : raw) {
        if (iv.end < iv.begin)
            throw Error(ErrorCode::reversed_interval,
                        "reversed interval [" + iv.begin.to_string() + "," + iv.end.to_string() + "]");
    }
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
        if (a.begin != b.begin) return a.begin < b.begin;
        return a.end < b.end;
    });
    IntervalSet out;
    for (auto& iv : raw) {
        if (!out.intervals_.empty() && iv.begin <= out.intervals_.back().end) {
            auto& last = out.intervals_.back();
            if (last.end < iv.end) last.end = std::move(iv.end);
        } else {
            out.intervals_.push_back(std::move(iv));
        }
    }
    return out;
}

IntervalSet IntervalSet::of(std::initializer_list<std::pair<Rational, Rational>> raw) {
    std::vector<Interval> v;
    v.reserve(raw.size());
    for (const auto& [b, e] : raw) v.push_back({b, e});
    return normalize(std::move(v));
}

IntervalSet IntervalSet::single(const Rational& begin, const Rational& end) {
    return normalize({{begin, end}});
}

Rational IntervalSet::measure() const {
    Rational total;
    for (const auto& iv : intervals_) total += iv.length();
    return total;
}

bool IntervalSet::contains(const Rational& t) const {
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                               [](const Rational& x, const Interval& iv) { return x < iv.begin; });
    if (it == intervals_.begin()) return false;
    return std::prev(it)->contains(t);
}

bool IntervalSet::is_subset_of(const IntervalSet& other) const {
    // Canonical intervals are maximal, so each of ours must sit inside one of theirs.
    auto it = other.intervals_.begin();
    for (const auto& iv : intervals_) {
        while (it != other.intervals_.end() && it->end < iv.begin) ++it;
        if (it == other.intervals_.end() || iv.begin < it->begin || it->end < iv.end) return false;
    }
    return true;
}

std::vector<Rational> IntervalSet::endpoints() const {
    std::vector<Rational> out;
    out.reserve(2 * intervals_.size());
    for (const auto& iv : intervals_) {
        out.push_back(iv.begin);
        out.push_back(iv.end);
    }
    return out;
}

std::string IntervalSet::to_string() const {
    if (intervals_.empty()) return "{}";
    std::string s;
    for (const auto& iv : intervals_) {
        if (!s.empty()) s += "u";
        s += "[" + iv.begin.to_string() + "," + iv.end.to_string() + "]";
    }
    return s;
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        const Rational& lo = max(i->begin, j->begin);
        const Rational& hi = min(i->end, j->end);
        if (lo <= hi) out.push_back({lo, hi});
        if (i->end < j->end)
            ++i;
        else
            ++j;
    }
    // Pieces come out sorted and disjoint; they cannot touch because the
    // inputs' intervals are separated by gaps.
    return IntervalSet::normalize(std::move(out));
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> all;
    all.reserve(a.size() + b.size());
    all.insert(all.end(), a.begin(), a.end());
    all.insert(all.end(), b.begin(), b.end());
    return IntervalSet::normalize(std::move(all));
}

IntervalSet unite_all(std::span<const IntervalSet> sets) {
    std::vector<Interval> all;
    for (const auto& s : sets) all.insert(all.end(), s.begin(), s.end());
    return IntervalSet::normalize(std::move(all));
}

IntervalSet dilate(const IntervalSet& a, const Rational& radius, const Interval& clip) {
    if (radius.sign() < 0) throw Error(ErrorCode::invalid_argument, "negative dilation radius");
    std::vector<Interval> grown;
    grown.reserve(a.size());
    for (const auto& iv : a) grown.push_back({iv.begin - radius, iv.end + radius});
    return intersect(IntervalSet::normalize(std::move(grown)), IntervalSet::normalize({clip}));
}

Rational overlap_measure(const IntervalSet& a, const IntervalSet& b) {
    Rational total;
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        const Rational& lo = max(i->begin, j->begin);
        const Rational& hi = min(i->end, j->end);
        if (lo < hi) total += hi - lo;
        if (i->end < j->end)
            ++i;
        else
            ++j;
    }
    return total;
}

}  // namespace sg
