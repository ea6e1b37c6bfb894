#include "chilab/tower.hpp"

#include <cassert>
#include <stdexcept>

namespace chilab {

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x.sign() < 0) return std::nullopt;
    Integer n = boost::multiprecision::sqrt(x.numerator());
    Integer d = boost::multiprecision::sqrt(x.denominator());
    if (n * n != x.numerator() || d * d != x.denominator()) return std::nullopt;
    return Rational(n, d);
}

std::optional<GoldenElem> golden_sqrt(const GoldenElem& g) {
    if (g.is_zero()) return GoldenElem();
    if (sign(g) < 0) return std::nullopt;
    const Rational alpha = g.a, beta = g.b;
    if (alpha.is_zero()) {
        // s = sqrt(beta) rational, or s = t*sqrt(5) with t^2 = beta/5.
        if (auto s = rational_sqrt(beta)) return GoldenElem::from_rational(*s);
        if (auto t = rational_sqrt(beta / Rational(5))) {
            GoldenElem s = GoldenElem::from_sqrt5_basis(Rational(0), *t);
            if (s * s == g && sign(s) >= 0) return s;
        }
        return std::nullopt;
    }
    // Solve (a*phi + b)^2 = alpha*phi + beta: a^2 + 2ab = alpha, a^2 + b^2 = beta
    // eliminates b into 5 a^4 - (2 alpha + 4 beta) a^2 + alpha^2 = 0.
    Rational B = Rational(2) * alpha + Rational(4) * beta;
    Rational disc = B * B - Rational(20) * alpha * alpha;
    auto sd = rational_sqrt(disc);
    if (!sd) return std::nullopt;
    for (const Rational& t : {(B + *sd) / Rational(10), (B - *sd) / Rational(10)}) {
        auto a = rational_sqrt(t);
        if (!a) continue;
        for (const Rational& av : {*a, -*a}) {
            if (av.is_zero()) continue;
            Rational bv = (alpha - av * av) / (Rational(2) * av);
            GoldenElem s{av, bv};
            if (s * s == g && sign(s) >= 0) return s;
        }
    }
    return std::nullopt;
}

TowerElem::TowerElem(GoldenElem p_, GoldenElem q_, GoldenElem r_)
    : p(std::move(p_)), q(std::move(q_)), r(std::move(r_)) {
    if (q.is_zero() || r.is_zero()) {
        q = GoldenElem();
        r = GoldenElem();
        return;
    }
    if (sign(r) < 0) throw std::domain_error("negative radicand in tower element");
    if (auto s = golden_sqrt(r)) {  // collapse p + q*sqrt(s^2) = p + q*s
        p = p + q * *s;
        q = GoldenElem();
        r = GoldenElem();
    }
}

std::string TowerElem::to_string() const {
    if (is_golden()) return p.to_string();
    return "(" + p.to_string() + ") + (" + q.to_string() + ")*sqrt(" + r.to_string() + ")";
}

TowerElem tower_neg(const TowerElem& x) { return TowerElem(-x.p, -x.q, x.r); }

std::optional<std::pair<TowerElem, TowerElem>> tower_merge(const TowerElem& x, const TowerElem& y) {
    if (x.is_golden() && y.is_golden()) return std::pair{x, y};
    if (x.is_golden()) return std::pair{TowerElem(x.p, GoldenElem(), y.r), y};
    if (y.is_golden()) return std::pair{x, TowerElem(y.p, GoldenElem(), x.r)};
    if (x.r == y.r) return std::pair{x, y};
    auto s = golden_sqrt(x.r * y.r);
    if (!s) return std::nullopt;
    // sqrt(r_y) = s / r_x * sqrt(r_x) with s = sqrt(r_x r_y) > 0.
    GoldenElem q2 = y.q * (*s / x.r);
    return std::pair{x, TowerElem(y.p, q2, x.r)};
}

namespace {
std::pair<TowerElem, TowerElem> merge_or_throw(const TowerElem& x, const TowerElem& y) {
    auto m = tower_merge(x, y);
    if (!m) throw radicand_mismatch_error("incompatible radicands: sqrt(" + x.r.to_string() +
                                          ") vs sqrt(" + y.r.to_string() + ")");
    return *m;
}

// Adopt a usable radicand so {_, 0, 0} elements combine with anything.
const GoldenElem& pick_radicand(const TowerElem& x, const TowerElem& y) {
    return x.is_golden() ? y.r : x.r;
}
}  // namespace

TowerElem tower_add(const TowerElem& x, const TowerElem& y) {
    auto [a, b] = merge_or_throw(x, y);
    return TowerElem(a.p + b.p, a.q + b.q, pick_radicand(a, b));
}

TowerElem tower_sub(const TowerElem& x, const TowerElem& y) { return tower_add(x, tower_neg(y)); }

TowerElem tower_mul(const TowerElem& x, const TowerElem& y) {
    auto [a, b] = merge_or_throw(x, y);
    const GoldenElem& r = pick_radicand(a, b);
    // (p1 + q1 s)(p2 + q2 s) = p1 p2 + q1 q2 r + (p1 q2 + p2 q1) s,  s = sqrt(r).
    return TowerElem(a.p * b.p + a.q * b.q * r, a.p * b.q + b.p * a.q, r);
}

TowerElem tower_inverse(const TowerElem& x) {
    if (x.is_zero()) throw zero_division_error("inverse of zero tower element");
    if (x.is_golden()) return TowerElem::from_golden(x.p.inverse());
    // Conjugate trick: 1/(p + q s) = (p - q s) / (p^2 - q^2 r); the norm is
    // nonzero because a canonical radicand is never a perfect square.
    GoldenElem n = x.p * x.p - x.q * x.q * x.r;
    assert(!n.is_zero());
    GoldenElem ninv = n.inverse();
    return TowerElem(x.p * ninv, -(x.q * ninv), x.r);
}

TowerElem tower_div(const TowerElem& x, const TowerElem& y) {
    return tower_mul(x, tower_inverse(y));
}

int sign(const TowerElem& x) {
    if (x.is_golden()) return sign(x.p);
    int sp = sign(x.p), sq = sign(x.q);
    if (sp == 0) return sq;          // q*sqrt(r) with r > 0
    if (sp == sq) return sp;
    int c = sign(x.p * x.p - x.q * x.q * x.r);
    assert(c != 0);  // equality would make r a perfect square
    return sp > 0 ? c : -c;
}

RatInterval tower_bounds(const TowerElem& x, int digits) {
    RatInterval pb = golden_bounds(x.p, digits);
    if (x.is_golden()) return pb;
    RatInterval qb = golden_bounds(x.q, digits);
    RatInterval rb = golden_bounds(x.r, digits);
    return iv_add(pb, iv_mul(qb, iv_sqrt(rb, digits)));
}

}  // namespace chilab
