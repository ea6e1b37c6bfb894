#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include "chilab/errors.hpp"

namespace chilab {

using Integer = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored normalized: gcd(num,den) = 1,
// den > 0, zero is 0/1.  Thin value wrapper around boost's cpp_rational.
class Rational {
public:
    using rep = boost::multiprecision::cpp_rational;

    Rational() = default;
    Rational(int v) : v_(v) {}                 // NOLINT: implicit by design
    Rational(long long v) : v_(v) {}           // NOLINT
    Rational(const Integer& v) : v_(v) {}      // NOLINT
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw zero_division_error("rational with zero denominator");
        // boost's rational constructor insists on a positive denominator
        v_ = den < 0 ? rep(-num, -den) : rep(num, den);
    }
    explicit Rational(rep v) : v_(std::move(v)) {}

    Integer numerator() const { return boost::multiprecision::numerator(v_); }
    Integer denominator() const { return boost::multiprecision::denominator(v_); }
    const rep& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }

    Rational operator-() const { return Rational(rep(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw zero_division_error("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (is_zero()) throw zero_division_error("inverse of zero");
        return Rational(rep(1) / v_);
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    // "p/q", or just "p" when the denominator is 1.
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    // Accepts "p" or "p/q" with an optional leading sign on p; q must be a
    // positive integer literal.  Returns nullopt on malformed input.
    static std::optional<Rational> parse(std::string_view text);

private:
    rep v_;
};

inline std::optional<Rational> Rational::parse(std::string_view text) {
    auto is_digits = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    bool neg = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        neg = text.front() == '-';
        text.remove_prefix(1);
    }
    std::string_view num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_digits(num) || !is_digits(den)) return std::nullopt;
    // trim leading zeros: boost's cpp_int reads "08" as a malformed octal literal
    while (num.size() > 1 && num.front() == '0') num.remove_prefix(1);
    while (den.size() > 1 && den.front() == '0') den.remove_prefix(1);
    Integer n{std::string(num)}, d{std::string(den)};
    if (d == 0) return std::nullopt;
    if (neg) n = -n;
    return Rational(n, d);
}

inline int sign(const Rational& r) { return r.sign(); }
inline Rational abs(const Rational& r) { return r.abs(); }

// 10^k as an exact integer (k >= 0).
inline Integer pow10(int k) {
    Integer p = 1;
    for (int i = 0; i < k; ++i) p *= 10;
    return p;
}

}  // namespace chilab
