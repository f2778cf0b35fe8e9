#include "streamgraph/rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sg {

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
    value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class q) {
    q.canonicalize();
    Rational r;
    r.value_ = std::move(q);
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    const auto bad = [&] { return std::invalid_argument("malformed number '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();

    bool negative = false;
    std::string_view body = text;
    if (body.front() == '-' || body.front() == '+') {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    mpq_class q;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den)) throw bad();
        mpz_class d(std::string{den}, 10);
        if (d == 0) throw bad();
        q = mpq_class(mpz_class(std::string{num}, 10), d);
    } else {
        long exponent = 0;
        if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
            auto exp_text = body.substr(e + 1);
            bool exp_negative = false;
            if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
                exp_negative = exp_text.front() == '-';
                exp_text.remove_prefix(1);
            }
            if (!all_digits(exp_text) || exp_text.size() > 6) throw bad();
            exponent = std::stol(std::string{exp_text});
            if (exp_negative) exponent = -exponent;
            body = body.substr(0, e);
        }
        std::string digits;
        long frac_len = 0;
        if (auto dot = body.find('.'); dot != std::string_view::npos) {
            auto ip = body.substr(0, dot);
            auto fp = body.substr(dot + 1);
            if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
                throw bad();
            digits = std::string{ip} + std::string{fp};
            frac_len = static_cast<long>(fp.size());
        } else {
            if (!all_digits(body)) throw bad();
            digits = std::string{body};
        }
        const long scale = exponent - frac_len;
        mpz_class n(digits, 10);
        if (scale >= 0)
            q = mpq_class(n * pow10(static_cast<unsigned long>(scale)));
        else
            q = mpq_class(n, pow10(static_cast<unsigned long>(-scale)));
    }
    q.canonicalize();
    if (negative) q = -q;
    return from_mpq(std::move(q));
}

Rational Rational::from_double(double value) {
    if (!std::isfinite(value)) throw std::invalid_argument("non-finite value");
    return from_mpq(mpq_class(value));
}

std::string Rational::numerator_str() const { return value_.get_num().get_str(); }
std::string Rational::denominator_str() const { return value_.get_den().get_str(); }
bool Rational::is_integer() const { return value_.get_den() == 1; }

std::string Rational::to_string() const {
    if (is_integer()) return numerator_str();
    return numerator_str() + "/" + denominator_str();
}

std::string Rational::to_decimal_or_fraction() const {
    if (is_integer()) return numerator_str();
    mpz_class den = value_.get_den();
    unsigned long twos = 0, fives = 0;
    while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) { den /= 2; ++twos; }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) { den /= 5; ++fives; }
    if (den != 1) return to_string();

    const unsigned long places = std::max(twos, fives);
    mpz_class scaled = value_.get_num() * pow10(places) / value_.get_den();
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.get_str();
    if (s.size() <= places) s.insert(0, places - s.size() + 1, '0');
    s.insert(s.size() - places, ".");
    return negative ? "-" + s : s;
}

std::string Rational::round_significant(int digits) const {
    if (is_zero()) return "0";
    mpq_class a = ::abs(value_);

    // Find e with 10^e <= a < 10^(e+1).
    const double approx = std::log10(a.get_d());
    long e = std::isfinite(approx) ? static_cast<long>(std::floor(approx)) : 0;
    auto power = [](long k) {
        return k >= 0 ? mpq_class(pow10(static_cast<unsigned long>(k)))
                      : mpq_class(mpz_class(1), pow10(static_cast<unsigned long>(-k)));
    };
    while (a < power(e)) --e;
    while (a >= power(e + 1)) ++e;

    auto round_at = [&](long exp10) {
        mpq_class scaled = a * power(digits - 1 - exp10);
        mpz_class whole = scaled.get_num() / scaled.get_den();
        mpq_class frac = scaled - mpq_class(whole);
        const int c = cmp(frac, mpq_class(1, 2));
        if (c > 0 || (c == 0 && mpz_odd_p(whole.get_mpz_t()))) whole += 1;
        return whole;
    };
    mpz_class mant = round_at(e);
    if (mant == pow10(static_cast<unsigned long>(digits))) {
        ++e;
        mant = round_at(e);
    }
    std::string s = mant.get_str();
    while (s.size() > 1 && s.back() == '0') s.pop_back();
    // mantissa d.ddd × 10^e
    std::string out;
    const long int_digits = e + 1;
    if (e >= 0 && int_digits <= digits) {
        if (static_cast<long>(s.size()) <= int_digits) {
            out = s + std::string(static_cast<std::size_t>(int_digits) - s.size(), '0');
        } else {
            out = s.substr(0, static_cast<std::size_t>(int_digits)) + "." + s.substr(static_cast<std::size_t>(int_digits));
        }
    } else if (e < 0 && e >= -6) {
        out = "0." + std::string(static_cast<std::size_t>(-e - 1), '0') + s;
    } else {
        out = s.substr(0, 1);
        if (s.size() > 1) out += "." + s.substr(1);
        out += "e" + std::to_string(e);
    }
    return sign() < 0 ? "-" + out : out;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (sign() < 0) return std::nullopt;
    const mpz_class& n = value_.get_num();
    const mpz_class& d = value_.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return from_mpq(mpq_class(rn, rd));
}

Rational Rational::abs() const { return from_mpq(::abs(value_)); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

}  // namespace sg
