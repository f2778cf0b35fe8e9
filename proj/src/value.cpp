#include "streamgraph/value.hpp"

#include <cmath>

namespace sg {

bool same_outcome(const Outcome& a, const Outcome& b, double tolerance) {
    if (!a || !b) return !a && !b;
    if (a->exact && b->exact) return *a->exact == *b->exact;
    return std::abs(a->to_double() - b->to_double()) <= tolerance;
}

Outcome ratio(const Value& num, const Value& den) {
    if (den.exact && num.exact) {
        if (den.exact->is_zero()) return std::nullopt;
        return Value::of(*num.exact / *den.exact);
    }
    const double d = den.to_double();
    if (d == 0.0) return std::nullopt;
    return Value::inexact(num.to_double() / d);
}

Metric ratio(const Rational& num, const Rational& den) {
    if (den.is_zero()) return std::nullopt;
    return num / den;
}

}  // namespace sg
