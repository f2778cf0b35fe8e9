#pragma once

#include "streamgraph/rational.hpp"

#include <optional>

namespace sg {

/// A metric that may be undefined (zero denominator). Undefined is nullopt,
/// never 0.
using Metric = std::optional<Rational>;

/// Metric value that is exact whenever the arithmetic allows it. Geometric
/// means and non-integer exponents fall back to floating point.
struct Value {
    std::optional<Rational> exact;
    double approx = 0.0;

    static Value of(const Rational& r) { return {r, r.to_double()}; }
    static Value inexact(double d) { return {std::nullopt, d}; }

    bool is_exact() const { return exact.has_value(); }
    double to_double() const { return exact ? exact->to_double() : approx; }
};

using Outcome = std::optional<Value>;

inline Outcome to_outcome(const Metric& m) {
    if (!m) return std::nullopt;
    return Value::of(*m);
}

/// Both undefined, or both defined and equal: exactly when both are exact,
/// otherwise within `tolerance`.
bool same_outcome(const Outcome& a, const Outcome& b, double tolerance = 1e-9);

/// Running sum mixing exact and floating-point contributions.
class MixedSum {
public:
    void add(const Value& v) {
        if (v.exact)
            exact_ += *v.exact;
        else {
            approx_ += v.approx;
            inexact_ = true;
        }
    }
    void add(const Rational& r) { exact_ += r; }
    void add_scaled(const Value& v, const Rational& scale) {
        if (v.exact)
            exact_ += *v.exact * scale;
        else {
            approx_ += v.approx * scale.to_double();
            inexact_ = true;
        }
    }
    bool is_zero() const { return !inexact_ ? exact_.is_zero() : (exact_.to_double() + approx_) == 0.0; }
    Value value() const {
        if (!inexact_) return Value::of(exact_);
        return Value::inexact(exact_.to_double() + approx_);
    }

private:
    Rational exact_;
    double approx_ = 0.0;
    bool inexact_ = false;
};

/// num / den, or nullopt when den is zero.
Outcome ratio(const Value& num, const Value& den);
Metric ratio(const Rational& num, const Rational& den);

}  // namespace sg
