#include "streamgraph/step_weight.hpp"

#include "streamgraph/error.hpp"

#include <algorithm>

namespace sg {

StepWeight StepWeight::from_pieces(std::vector<WeightPiece> pieces) {
    for (const auto& p : pieces) {
        if (p.interval.end < p.interval.begin)
            throw Error(ErrorCode::reversed_interval, "reversed weight piece");
    }
    std::sort(pieces.begin(), pieces.end(), [](const WeightPiece& a, const WeightPiece& b) {
        if (a.interval.begin != b.interval.begin) return a.interval.begin < b.interval.begin;
        return a.interval.end < b.interval.end;
    });
    StepWeight w;
    for (auto& p : pieces) {
        if (w.pieces_.empty()) {
            w.pieces_.push_back(std::move(p));
            continue;
        }
        auto& last = w.pieces_.back();
        const bool overlaps = p.interval.begin < last.interval.end ||
                              (p.interval.begin == last.interval.end && last.interval.is_point() &&
                               p.interval.is_point());
        if (overlaps || p.interval.begin == last.interval.end) {
            if (last.value == p.value) {
                if (last.interval.end < p.interval.end) last.interval.end = std::move(p.interval.end);
                continue;
            }
            if (overlaps)
                throw Error(ErrorCode::weight_support,
                            "conflicting weights " + last.value.to_string() + " and " + p.value.to_string() +
                                " around t=" + p.interval.begin.to_string());
        }
        w.pieces_.push_back(std::move(p));
    }
    return w;
}

StepWeight StepWeight::constant(const IntervalSet& support, const Rational& value) {
    StepWeight w;
    w.pieces_.reserve(support.size());
    for (const auto& iv : support) w.pieces_.push_back({iv, value});
    return w;
}

IntervalSet StepWeight::support() const {
    std::vector<Interval> raw;
    raw.reserve(pieces_.size());
    for (const auto& p : pieces_) raw.push_back(p.interval);
    return IntervalSet::normalize(std::move(raw));
}

std::optional<Rational> StepWeight::value_at(const Rational& t) const {
    for (const auto& p : pieces_) {
        if (t < p.interval.begin) break;
        if (p.interval.contains(t)) return p.value;
    }
    return std::nullopt;
}

Rational StepWeight::integrate(const IntervalSet& over) const {
    Rational total;
    auto j = over.begin();
    for (const auto& p : pieces_) {
        while (j != over.end() && j->end <= p.interval.begin) ++j;
        for (auto k = j; k != over.end() && k->begin < p.interval.end; ++k) {
            const Rational lo = max(k->begin, p.interval.begin);
            const Rational hi = min(k->end, p.interval.end);
            if (lo < hi) total += p.value * (hi - lo);
        }
    }
    return total;
}

Rational StepWeight::integrate() const {
    Rational total;
    for (const auto& p : pieces_) total += p.value * p.interval.length();
    return total;
}

IntervalSet StepWeight::at_least(const Rational& tau) const {
    std::vector<Interval> raw;
    for (const auto& p : pieces_)
        if (p.value >= tau) raw.push_back(p.interval);
    return IntervalSet::normalize(std::move(raw));
}

std::optional<Rational> StepWeight::min_value() const {
    if (pieces_.empty()) return std::nullopt;
    Rational m = pieces_.front().value;
    for (const auto& p : pieces_) m = min(m, p.value);
    return m;
}

std::optional<Rational> StepWeight::max_value() const {
    if (pieces_.empty()) return std::nullopt;
    Rational m = pieces_.front().value;
    for (const auto& p : pieces_) m = max(m, p.value);
    return m;
}

bool StepWeight::is_constant() const {
    return std::all_of(pieces_.begin(), pieces_.end(),
                       [&](const WeightPiece& p) { return p.value == pieces_.front().value; });
}

StepWeight combine(const StepWeight& a, const StepWeight& b,
                   const std::function<Rational(const Rational&, const Rational&)>& fn) {
    std::vector<WeightPiece> out;
    auto i = a.pieces().begin();
    auto j = b.pieces().begin();
    while (i != a.pieces().end() && j != b.pieces().end()) {
        const Rational lo = max(i->interval.begin, j->interval.begin);
        const Rational hi = min(i->interval.end, j->interval.end);
        if (lo < hi) out.push_back({{lo, hi}, fn(i->value, j->value)});
        if (i->interval.end < j->interval.end)
            ++i;
        else
            ++j;
    }
    return StepWeight::from_pieces(std::move(out));
}

StepWeight multiply(const StepWeight& a, const StepWeight& b) {
    return combine(a, b, [](const Rational& x, const Rational& y) { return x * y; });
}

StepWeight count_cover(std::span<const IntervalSet> sets) {
    const IntervalSet support = unite_all(sets);
    std::vector<Rational> cuts;
    for (const auto& s : sets)
        for (const auto& iv : s) {
            cuts.push_back(iv.begin);
            cuts.push_back(iv.end);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto count_at = [&](const Rational& t) {
        std::int64_t c = 0;
        for (const auto& s : sets)
            if (s.contains(t)) ++c;
        return Rational(c);
    };

    std::vector<WeightPiece> pieces;
    for (const auto& comp : support) {
        if (comp.is_point()) {
            pieces.push_back({comp, count_at(comp.begin)});
            continue;
        }
        auto lo = std::lower_bound(cuts.begin(), cuts.end(), comp.begin);
        for (auto it = lo; std::next(it) != cuts.end() && *it < comp.end; ++it) {
            const Rational& a = *it;
            const Rational& b = *std::next(it);
            pieces.push_back({{a, b}, count_at((a + b) / Rational(2))});
        }
    }
    return StepWeight::from_pieces(std::move(pieces));
}

}  // namespace sg
