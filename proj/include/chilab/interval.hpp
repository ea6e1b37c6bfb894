#pragma once

#include "chilab/golden.hpp"
#include "chilab/rational.hpp"

namespace chilab {

// Closed interval with exact rational endpoints, lo <= hi.  Used wherever a
// value leaves the exactly-representable fields: the enclosed real is always
// guaranteed to lie inside.
struct RatInterval {
    Rational lo;
    Rational hi;

    static RatInterval point(const Rational& r) { return {r, r}; }

    Rational width() const { return hi - lo; }
    Rational mid() const { return (lo + hi) / Rational(2); }
    bool is_point() const { return lo == hi; }
    bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }
};

RatInterval iv_add(const RatInterval& x, const RatInterval& y);
RatInterval iv_sub(const RatInterval& x, const RatInterval& y);
RatInterval iv_neg(const RatInterval& x);
RatInterval iv_mul(const RatInterval& x, const RatInterval& y);
RatInterval iv_scale(const RatInterval& x, const Rational& s);
RatInterval iv_offset(const RatInterval& x, const Rational& s);
// Requires an interval strictly excluding zero.
RatInterval iv_inv(const RatInterval& x);
RatInterval iv_div(const RatInterval& x, const RatInterval& y);

// Enclosure of sqrt(x) for x >= 0 with width <= 10^-digits, computed by
// integer square root on x scaled by 10^(2*digits).  Exact square inputs
// give a point interval.
RatInterval sqrt_bounds(const Rational& x, int digits);
// Enclosure of sqrt over an interval (lo clamped at 0).
RatInterval iv_sqrt(const RatInterval& x, int digits);

// Enclosure of a golden element: b + a*[phi bounds at the given precision].
RatInterval golden_bounds(const GoldenElem& g, int digits);
// Enclosure of phi itself.
RatInterval phi_bounds(int digits);

}  // namespace chilab
