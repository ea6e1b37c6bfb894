#include "chilab/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace chilab {

RatInterval iv_add(const RatInterval& x, const RatInterval& y) {
    return {x.lo + y.lo, x.hi + y.hi};
}

RatInterval iv_sub(const RatInterval& x, const RatInterval& y) {
    return {x.lo - y.hi, x.hi - y.lo};
}

RatInterval iv_neg(const RatInterval& x) { return {-x.hi, -x.lo}; }

RatInterval iv_mul(const RatInterval& x, const RatInterval& y) {
    Rational p1 = x.lo * y.lo, p2 = x.lo * y.hi, p3 = x.hi * y.lo, p4 = x.hi * y.hi;
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

RatInterval iv_scale(const RatInterval& x, const Rational& s) {
    if (s.sign() >= 0) return {x.lo * s, x.hi * s};
    return {x.hi * s, x.lo * s};
}

RatInterval iv_offset(const RatInterval& x, const Rational& s) {
    return {x.lo + s, x.hi + s};
}

RatInterval iv_inv(const RatInterval& x) {
    if (x.contains_zero()) throw zero_division_error("interval inverse across zero");
    return {x.hi.inverse(), x.lo.inverse()};
}

RatInterval iv_div(const RatInterval& x, const RatInterval& y) {
    return iv_mul(x, iv_inv(y));
}

RatInterval sqrt_bounds(const Rational& x, int digits) {
    if (x.sign() < 0) throw std::domain_error("sqrt of negative rational");
    if (x.is_zero()) return RatInterval::point(Rational(0));
    Integer scale = pow10(digits);
    Integer scale2 = scale * scale;
    // floor(x * 10^(2d)) then integer sqrt: u <= sqrt(x)*10^d < u+1.
    Integer scaled = (x.numerator() * scale2) / x.denominator();
    Integer u = boost::multiprecision::sqrt(scaled);
    Rational lo(u, scale);
    if (lo * lo == x) return RatInterval::point(lo);  // exact square
    return {lo, Rational(u + 1, scale)};
}

RatInterval iv_sqrt(const RatInterval& x, int digits) {
    Rational lo = x.lo.sign() < 0 ? Rational(0) : x.lo;
    return {sqrt_bounds(lo, digits).lo, sqrt_bounds(x.hi, digits).hi};
}

RatInterval phi_bounds(int digits) {
    RatInterval s5 = sqrt_bounds(Rational(5), digits);
    return iv_scale(iv_offset(s5, Rational(1)), Rational(1, 2));
}

RatInterval golden_bounds(const GoldenElem& g, int digits) {
    return iv_offset(iv_scale(phi_bounds(digits), g.a), g.b);
}

}  // namespace chilab
