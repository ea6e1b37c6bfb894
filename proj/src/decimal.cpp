#include "chilab/decimal.hpp"

#include <cassert>

namespace chilab {

std::string format_rational_fixed(const Rational& x, int places) {
    assert(places >= 0);
    Integer n = x.numerator(), d = x.denominator();
    bool neg = n < 0;
    if (neg) n = -n;
    std::string s = Integer(n / d).str();
    n %= d;
    if (places > 0) {
        s += '.';
        for (int i = 0; i < places; ++i) {
            n *= 10;
            s += static_cast<char>('0' + static_cast<int>(n / d));
            n %= d;
        }
    }
    // Truncation of a small negative like -1/5000 at 3 places is zero; don't
    // print "-0.000".
    bool all_zero = s.find_first_of("123456789") == std::string::npos;
    return (neg && !all_zero) ? "-" + s : s;
}

bool try_truncate(const RatInterval& iv, int places, DecimalApprox& out) {
    Rational tol(Integer(1), pow10(places + 2));
    if (!iv.is_point() && !(iv.width() < tol)) return false;
    std::string lo = format_rational_fixed(iv.lo, places);
    std::string hi = format_rational_fixed(iv.hi, places);
    if (lo != hi) return false;  // enclosure straddles a truncation boundary
    out.digits = lo;
    auto t = Rational::parse(lo.find('.') == std::string::npos
                                 ? lo
                                 : lo.substr(0, lo.find('.')) + lo.substr(lo.find('.') + 1));
    assert(t);
    out.truncated = *t / Rational(pow10(places));
    Rational elo = (iv.lo - out.truncated).abs();
    Rational ehi = (iv.hi - out.truncated).abs();
    out.error_bound = elo > ehi ? elo : ehi;
    assert(out.error_bound < Rational(Integer(1), pow10(places)));
    return true;
}

DecimalApprox eval_decimal(const Value& v, int places) {
    Value w = demote(v);
    if (const auto* r = std::get_if<Rational>(&w)) {
        DecimalApprox out;
        out.digits = format_rational_fixed(*r, places);
        bool ok = try_truncate(RatInterval::point(*r), places, out);
        assert(ok);
        (void)ok;
        return out;
    }
    return eval_decimal_refining([&](int working) { return value_bounds(w, working); }, places);
}

}  // namespace chilab
