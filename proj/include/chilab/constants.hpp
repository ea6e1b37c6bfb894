#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chilab/decimal.hpp"
#include "chilab/value.hpp"

namespace chilab {

// phi = (1 + sqrt(5))/2, the unit of the golden field.
GoldenElem phi();
// 1/phi = phi - 1.
GoldenElem inv_phi();

// chi: the positive root of x^2 - (1/phi) x - 1, in closed form
// (sqrt(5) - 1 + sqrt(22 - 2 sqrt(5))) / 4.  Ratio of consecutive H terms.
TowerElem chi();
// chi': the positive root of x^2 - phi x - 1, in closed form
// (1 + sqrt(5) + sqrt(22 + 2 sqrt(5))) / 4.
TowerElem chi_prime();

// n-th metallic mean (n + sqrt(n^2 + 4)) / 2, the positive root of
// x^2 - n x - 1.  n = 1 gives phi exactly (golden kind), n = 4 collapses to
// 2*phi + 1 = phi^3; other n stay genuine towers.  Throws on n = 0.
Value metallic(unsigned n);

// Polynomial with coefficients in Q(sqrt(5)), lowest degree first, highest
// coefficient nonzero (unless the polynomial is zero).
struct Poly {
    std::vector<GoldenElem> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    // Degree-descending coefficient list, the order the quartics are usually
    // written in.
    std::vector<GoldenElem> descending() const {
        return {coeffs.rbegin(), coeffs.rend()};
    }
    friend bool operator==(const Poly& x, const Poly& y) { return x.coeffs == y.coeffs; }
};

Poly poly_from_descending(std::vector<GoldenElem> coeffs);
Poly poly_mul(const Poly& x, const Poly& y);
// Horner evaluation; result demotes like all value arithmetic.
Value poly_eval(const Poly& p, const Value& x);
std::string poly_to_string(const Poly& p);  // "x^4+x^3-3*x^2-x+1" style

// The two ways of pairing the chi / chi' quadratics into a quartic:
//   same_signs:  (x^2 - phi x - 1)(x^2 - (1/phi) x - 1)
//                = x^4 - sqrt(5) x^3 - x^2 + sqrt(5) x + 1
//   mixed_signs: (x^2 - (1/phi) x - 1)(x^2 + phi x - 1)
//                = x^4 + x^3 - 3 x^2 - x + 1   (integer coefficients; chi is
//                  a root, and this quartic is irreducible over Q)
enum class QuarticPairing { same_signs, mixed_signs };
Poly quartic_expand(QuarticPairing pairing);

// Catalogue entry for the ratios the laboratory knows by name.  `exact` is
// set for the field-representable ones; the plastic and cordovan ratios are
// carried as certified 3-place decimal literals instead (flagged
// approximate) together with an integer defining polynomial.
struct NamedConstant {
    std::string name;
    std::optional<Value> exact;
    std::string decimal3;  // 3 fractional places, truncated
    bool approximate;      // true when `exact` is absent
    std::optional<Poly> defining_poly;
    std::string description;
};

const std::vector<NamedConstant>& named_constants();
const NamedConstant* find_constant(const std::string& name);

}  // namespace chilab
