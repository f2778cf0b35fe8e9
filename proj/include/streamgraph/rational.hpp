#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace sg {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);

    static Rational from_mpq(mpq_class q);

    /// Parses "p", "p/q", "-1.25" or "2.5e-3". Throws std::invalid_argument.
    static Rational parse(std::string_view text);

    /// Exact conversion of a finite double.
    static Rational from_double(double value);

    const mpq_class& mpq() const { return value_; }

    std::string numerator_str() const;
    std::string denominator_str() const;
    bool is_integer() const;
    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    double to_double() const { return value_.get_d(); }

    /// "p" or "p/q".
    std::string to_string() const;

    /// Shortest exact textual form: integer, terminating decimal, else "p/q".
    std::string to_decimal_or_fraction() const;

    /// Rounds to `digits` significant decimal digits, ties to even, and
    /// renders in scientific-free decimal or exponent form parseable by strtod.
    std::string round_significant(int digits) const;

    /// Exact square root when numerator and denominator are perfect squares.
    std::optional<Rational> exact_sqrt() const;

    Rational abs() const;

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return from_mpq(-a.value_); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace sg

template <>
struct std::hash<sg::Rational> {
    std::size_t operator()(const sg::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.to_string());
    }
};
