#pragma once

#include <string>

#include "chilab/rational.hpp"

namespace chilab {

// Element of the quadratic field Q(sqrt(5)) written on the phi-basis:
// value = a*phi + b with phi^2 = phi + 1.  The (a, b) pair is a unique
// representation, so structural equality is value equality.
struct GoldenElem {
    Rational a;  // phi coefficient
    Rational b;  // rational part

    GoldenElem() = default;
    GoldenElem(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

    static GoldenElem from_rational(const Rational& r) { return {Rational(0), r}; }
    // u + v*sqrt(5)  ->  (2v)*phi + (u - v), since sqrt(5) = 2*phi - 1.
    static GoldenElem from_sqrt5_basis(const Rational& u, const Rational& v) {
        return {Rational(2) * v, u - v};
    }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_rational() const { return a.is_zero(); }

    // value = u + v*sqrt(5) with v = a/2, u = a/2 + b.
    Rational sqrt5_coeff() const { return a / Rational(2); }
    Rational rational_part() const { return a / Rational(2) + b; }

    GoldenElem conj() const { return {-a, a + b}; }  // phi -> 1 - phi
    // N(a*phi + b) = (a*phi + b) * conj = b^2 + a*b - a^2; zero iff a = b = 0.
    Rational norm() const { return b * b + a * b - a * a; }

    GoldenElem operator-() const { return {-a, -b}; }

    friend GoldenElem operator+(const GoldenElem& x, const GoldenElem& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend GoldenElem operator-(const GoldenElem& x, const GoldenElem& y) {
        return {x.a - y.a, x.b - y.b};
    }
    // (a*phi + b)(c*phi + d) = ac*phi^2 + (ad + bc)*phi + bd
    //                        = (ac + ad + bc)*phi + (ac + bd).
    friend GoldenElem operator*(const GoldenElem& x, const GoldenElem& y) {
        Rational ac = x.a * y.a;
        return {ac + x.a * y.b + x.b * y.a, ac + x.b * y.b};
    }
    friend GoldenElem operator*(const GoldenElem& x, const Rational& s) {
        return {x.a * s, x.b * s};
    }
    friend GoldenElem operator*(const Rational& s, const GoldenElem& x) { return x * s; }

    GoldenElem inverse() const {
        if (is_zero()) throw zero_division_error("inverse of zero golden element");
        Rational n = norm();
        return {-a / n, (a + b) / n};  // conj / norm
    }
    friend GoldenElem operator/(const GoldenElem& x, const GoldenElem& y) {
        return x * y.inverse();
    }

    friend bool operator==(const GoldenElem& x, const GoldenElem& y) {
        return x.a == y.a && x.b == y.b;
    }

    // Display form on the phi basis: "phi", "2*phi+1", "-1/2*phi+1/2", "3".
    std::string to_string() const;
};

// Exact sign via the sqrt(5) basis: for u + v*sqrt(5) with u, v rational,
// compare u^2 against 5 v^2 when the signs of u and v disagree.
inline int sign(const GoldenElem& g) {
    Rational v = g.sqrt5_coeff(), u = g.rational_part();
    int su = sign(u), sv = sign(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    int c = sign(u * u - Rational(5) * v * v);  // never 0 here: sqrt(5) is irrational
    return su > 0 ? c : -c;
}

inline std::string GoldenElem::to_string() const {
    if (a.is_zero()) return b.to_string();
    std::string s;
    if (a == Rational(1)) s = "phi";
    else if (a == Rational(-1)) s = "-phi";
    else s = a.to_string() + "*phi";
    if (!b.is_zero()) {
        if (b.sign() > 0) s += "+" + b.to_string();
        else s += b.to_string();  // '-' comes with the numerator
    }
    return s;
}

}  // namespace chilab
