#pragma once

#include <optional>
#include <string>

#include "chilab/golden.hpp"
#include "chilab/interval.hpp"

namespace chilab {

// sqrt(x) when x is a perfect square in Q (both numerator and denominator
// perfect integer squares); nullopt otherwise.  Requires x >= 0.
std::optional<Rational> rational_sqrt(const Rational& x);

// sqrt(g) when g is a perfect square in Q(sqrt(5)); returns the non-negative
// root.  Covers rational squares, multiples of sqrt(5) (5 = (2*phi-1)^2), and
// genuine golden squares like 60*phi + 104 = (10*phi - 2)^2.
std::optional<GoldenElem> golden_sqrt(const GoldenElem& g);

// One level of radical over the golden field: value = p + q * sqrt(r) with
// p, q, r all in Q(sqrt(5)).  Canonical form (established on construction):
//   - if q = 0 or r = 0 the element is pure golden, stored as {p, 0, 0};
//   - r is never a perfect square in Q(sqrt(5)) (square radicands collapse
//     into p), and r > 0;
//   - consequently the value is 0 iff q = 0 and p = 0.
// Structural equality implies value equality; the converse across different
// radicand representations (sqrt(8) vs 2*sqrt(2)) is value_eq's job.
struct TowerElem {
    GoldenElem p;
    GoldenElem q;
    GoldenElem r;

    TowerElem() = default;
    // Normalizes.  Throws std::domain_error if q != 0 and r < 0.
    TowerElem(GoldenElem p_, GoldenElem q_, GoldenElem r_);

    static TowerElem from_golden(const GoldenElem& g) { return TowerElem(g, GoldenElem(), GoldenElem()); }
    static TowerElem from_rational(const Rational& x) { return from_golden(GoldenElem::from_rational(x)); }

    bool is_golden() const { return q.is_zero(); }
    bool is_zero() const { return q.is_zero() && p.is_zero(); }

    friend bool operator==(const TowerElem& x, const TowerElem& y) {
        return x.p == y.p && x.q == y.q && x.r == y.r;
    }

    std::string to_string() const;
};

TowerElem tower_neg(const TowerElem& x);
TowerElem tower_add(const TowerElem& x, const TowerElem& y);
TowerElem tower_sub(const TowerElem& x, const TowerElem& y);
TowerElem tower_mul(const TowerElem& x, const TowerElem& y);
// Throws zero_division_error on zero input.
TowerElem tower_inverse(const TowerElem& x);
TowerElem tower_div(const TowerElem& x, const TowerElem& y);

// Rewrites x and y over a common radicand when possible: trivially when one
// side is pure golden or the radicands are structurally equal, and by square
// extraction when r_x * r_y is a perfect square in Q(sqrt(5)) (then
// sqrt(r_y) = sqrt(r_x * r_y) / r_x * sqrt(r_x)).  nullopt when the radicands
// are genuinely incompatible.
std::optional<std::pair<TowerElem, TowerElem>> tower_merge(const TowerElem& x, const TowerElem& y);

// Exact sign: structural zero test on the canonical form, otherwise compare
// p^2 against q^2 * r inside Q(sqrt(5)).
int sign(const TowerElem& x);

// Enclosure at roughly 10^-digits endpoint granularity.
RatInterval tower_bounds(const TowerElem& x, int digits);

}  // namespace chilab
