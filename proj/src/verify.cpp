#include "chilab/verify.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "chilab/constants.hpp"
#include "chilab/fold.hpp"
#include "chilab/rect.hpp"
#include "chilab/sequences.hpp"
#include "chilab/serialize.hpp"

namespace chilab {

namespace {

Value V(const Rational& r) { return Value(r); }
Value V(const GoldenElem& g) { return Value(g); }

Value abs_value(const Value& v) { return sign(v) < 0 ? value_neg(v) : v; }

bool within(const Value& x, const Value& target, const Rational& tol) {
    return value_compare(abs_value(value_sub(x, target)), V(tol)) < 0;
}

Poly quadratic(const GoldenElem& linear) {  // x^2 + linear*x - 1
    return poly_from_descending({{Rational(0), Rational(1)}, linear, {Rational(0), Rational(-1)}});
}

bool poly_kills(const Poly& p, const Value& x) { return is_zero(poly_eval(p, x)); }

struct Check {
    std::string name;
    std::function<bool()> fn;
};

std::vector<Check> make_checks() {
    std::vector<Check> checks;
    auto add = [&](std::string name, std::function<bool()> fn) {
        checks.push_back({std::move(name), std::move(fn)});
    };

    add("phi_square_is_phi_plus_one", [] {
        return value_eq(value_mul(V(phi()), V(phi())), value_add(V(phi()), V(Rational(1)))) &&
               value_eq(value_inverse(V(phi())), V(inv_phi()));
    });

    add("phi_cube_is_metallic_four", [] {
        Value cube = value_mul(V(phi()), value_mul(V(phi()), V(phi())));
        return value_eq(cube, metallic(4)) && kind_of(metallic(4)) == ValueKind::golden;
    });

    add("chi_defining_quadratic", [] { return poly_kills(quadratic(-inv_phi()), Value(chi())); });

    add("chi_prime_defining_quadratic",
        [] { return poly_kills(quadratic(-phi()), Value(chi_prime())); });

    add("chi_between_four_thirds_and_sqrt2", [] {
        Value sqrt2 = demote(Value(TowerElem({}, {Rational(0), Rational(1)}, {Rational(0), Rational(2)})));
        return value_compare(V(Rational(4, 3)), Value(chi())) < 0 &&
               value_compare(Value(chi()), sqrt2) < 0;
    });

    add("chi_prime_is_phi_plus_inverse", [] {
        Value cp{chi_prime()};
        return value_eq(cp, value_add(V(phi()), value_inverse(cp))) &&
               value_compare(V(phi()), cp) < 0;
    });

    add("quartic_mixed_has_integer_coefficients", [] {
        Poly expected = poly_from_descending({{Rational(0), Rational(1)},
                                              {Rational(0), Rational(1)},
                                              {Rational(0), Rational(-3)},
                                              {Rational(0), Rational(-1)},
                                              {Rational(0), Rational(1)}});
        return quartic_expand(QuarticPairing::mixed_signs) == expected;
    });

    add("quartic_mixed_roots_chi_and_minus_chi_prime", [] {
        Poly q = quartic_expand(QuarticPairing::mixed_signs);
        return poly_kills(q, Value(chi())) && poly_kills(q, value_neg(Value(chi_prime())));
    });

    add("quartic_same_signs_sqrt5_coefficients", [] {
        GoldenElem sqrt5 = GoldenElem::from_sqrt5_basis(Rational(0), Rational(1));
        Poly expected = poly_from_descending({{Rational(0), Rational(1)},
                                              -sqrt5,
                                              {Rational(0), Rational(-1)},
                                              sqrt5,
                                              {Rational(0), Rational(1)}});
        return quartic_expand(QuarticPairing::same_signs) == expected;
    });

    add("quartic_same_signs_roots_chi_and_chi_prime", [] {
        Poly q = quartic_expand(QuarticPairing::same_signs);
        return poly_kills(q, Value(chi())) && poly_kills(q, Value(chi_prime()));
    });

    add("quadratic_factor_vieta_sums_and_products", [] {
        // x^2 - (1/phi) x - 1: roots chi and 1/phi - chi, product -1
        Value chi_other = value_sub(V(inv_phi()), Value(chi()));
        // x^2 - phi x - 1: roots chi_prime and phi - chi_prime, product -1
        Value cp_other = value_sub(V(phi()), Value(chi_prime()));
        Value minus_one{Rational(-1)};
        return value_eq(value_mul(Value(chi()), chi_other), minus_one) &&
               value_eq(value_mul(Value(chi_prime()), cp_other), minus_one) &&
               value_eq(value_add(Value(chi()), chi_other), V(inv_phi())) &&
               value_eq(value_add(Value(chi_prime()), cp_other), V(phi()));
    });

    add("h_ratios_follow_phi_plus_reciprocal", [] {
        std::vector<GoldenElem> r = h_ratio_convergence(16);
        for (size_t k = 1; k + 1 < r.size(); ++k) {
            if (!(r[k + 1] == GoldenElem(phi()) + r[k].inverse())) return false;
        }
        return true;
    });

    add("h_ratios_match_cf_chain", [] {
        std::vector<GoldenElem> r = h_ratio_convergence(15);  // r[j] = H_{j+2}/H_{j+1}
        std::vector<Value> cf =
            cf_convergents({V(phi()), V(r[1]), 12});  // seeded at H_3/H_2
        for (size_t j = 0; j < cf.size(); ++j)
            if (!value_eq(cf[j], V(r[j + 1]))) return false;
        return true;
    });

    add("h_ratio_limit_is_chi_prime", [] {
        std::vector<GoldenElem> r = h_ratio_convergence(22);
        return within(V(r.back()), Value(chi_prime()), Rational(Integer(1), pow10(10)));
    });

    add("metallic_means_defining_quadratics", [] {
        for (unsigned n = 1; n <= 6; ++n) {
            Value m = metallic(n);
            Value residue = value_sub(value_mul(m, m),
                                      value_add(value_mul(V(Rational(static_cast<long long>(n))), m),
                                                V(Rational(1))));
            if (!is_zero(residue)) return false;
        }
        return value_eq(metallic(1), V(phi()));
    });

    add("silver_bronze_truncations", [] {
        return eval_decimal(metallic(2), 9).digits == "2.414213562" &&
               eval_decimal(metallic(3), 9).digits == "3.302775637" &&
               pretty_value(metallic(2)) == "1+sqrt(2)";
    });

    add("extend_of_one_is_phi_on_both_branches", [] {
        ExtendResult below = extend_ratio(V(Rational(1)), ExtendBranch::below_phi);
        ExtendResult above = extend_ratio(V(Rational(1)), ExtendBranch::above_phi);
        return below.exact && above.exact && value_eq(*below.exact, V(phi())) &&
               value_eq(*above.exact, V(phi()));
    });

    add("extend_of_phi_is_chi", [] {
        ExtendResult r = extend_ratio(V(phi()), ExtendBranch::below_phi);
        return r.exact && value_eq(*r.exact, Value(chi()));
    });

    add("extend_chain_reaches_1434", [] {
        std::vector<ExtendStep> chain = extend_sequence(3, 3);
        return chain.size() == 4 && chain[3].approx.digits == "1.434";
    });

    add("subdivision_partition_and_foot", [] {
        for (const Value& x : {V(phi()), Value(chi()), V(Rational(3, 2))}) {
            Subdivision s = subdivide(x);
            if (!value_eq(value_add(s.kept_length, s.strip_width), s.whole_length)) return false;
            // foot lies on the diagonal y = x_coord / x ...
            if (!value_eq(value_mul(s.foot[1], x), s.foot[0])) return false;
            // ... and the two cut lines are orthogonal: (x,1).(-1/x,1) = 0.
            Value dot = value_add(value_mul(s.diag_b[0], value_sub(s.perp_b[0], s.perp_a[0])),
                                  value_mul(s.diag_b[1], value_sub(s.perp_b[1], s.perp_a[1])));
            if (!is_zero(dot)) return false;
        }
        return true;
    });

    add("subdivision_kept_pieces", [] {
        return value_eq(subdivide(V(phi())).kept_length, V(Rational(1))) &&
               value_eq(subdivide(Value(chi())).kept_length, V(inv_phi()));
    });

    add("fold_cf_matches_convergents", [] {
        for (int n = 1; n <= 4; ++n) {
            for (int d = 1; d <= 8; ++d) {
                Rational folded = fold_cf(n, d).value;
                std::vector<Value> cf =
                    cf_convergents({V(Rational(n)), V(Rational(n)), d + 1});
                if (!value_eq(V(folded), cf.back())) return false;
            }
        }
        return true;
    });

    add("fold_harmonic_identity", [] {
        HarmonicResult h = fold_harmonic(3, 2);
        if (!(h.sum_recip == Rational(5, 6) && h.harmonic == Rational(12, 5))) return false;
        for (int m = 1; m <= 6; ++m) {
            for (int n = 1; n <= 6; ++n) {
                HarmonicResult r = fold_harmonic(m, n);
                Rational expect(Integer(2) * m * n, Integer(m) + n);
                if (!(r.harmonic == expect)) return false;
                if (!(replay(r.trace) == r.sum_recip)) return false;
            }
        }
        return true;
    });

    add("fold_golden_converges_to_phi", [] {
        FoldResult r = fold_golden_from(Rational(1, 10), 60);
        return replay(r.trace) == r.value &&
               within(V(r.value), V(phi()), Rational(Integer(1), pow10(10)));
    });

    add("nested_radical_reaches_phi", [] {
        std::vector<RadicalStep> steps = nested_radical({V(Rational(1)), Rational(1), 40}, 12);
        return within(V(steps.back().approx.truncated), V(phi()),
                      Rational(Integer(1), pow10(10)));
    });

    add("cf_from_unity_is_fibonacci", [] {
        FibonacciRatios fib = fibonacci_ratios(20);
        std::vector<Value> cf = cf_convergents({V(Rational(1)), V(Rational(1)), 20});
        for (size_t k = 0; k < cf.size(); ++k)
            if (!value_eq(cf[k], V(fib.ratios[k]))) return false;
        return true;
    });

    add("ordering_chain", [] {
        // cordovan and plastic enter through their certified 3-place brackets.
        Value cordovan_hi{Rational(1307, 1000)};
        Value plastic_lo{Rational(1324, 1000)}, plastic_hi{Rational(1325, 1000)};
        Value sqrt2 = demote(Value(TowerElem({}, {Rational(0), Rational(1)}, {Rational(0), Rational(2)})));
        return value_compare(cordovan_hi, plastic_lo) < 0 &&
               value_compare(plastic_hi, V(Rational(4, 3))) < 0 &&
               value_compare(V(Rational(4, 3)), Value(chi())) < 0 &&
               value_compare(Value(chi()), sqrt2) < 0 &&
               value_compare(sqrt2, V(phi())) < 0 &&
               value_compare(V(phi()), Value(chi_prime())) < 0;
    });

    return checks;
}

}  // namespace

int run_verify(std::ostream& out) {
    int failures = 0;
    std::vector<Check> checks = make_checks();
    for (const Check& c : checks) {
        bool pass = false;
        std::string detail;
        try {
            pass = c.fn();
        } catch (const std::exception& e) {
            detail = std::string(" (") + e.what() + ")";
        }
        out << (pass ? "ok   " : "FAIL ") << c.name << detail << "\n";
        if (!pass) ++failures;
    }
    out << (failures == 0 ? "verified " : "FAILED ") << (checks.size() - failures) << "/"
        << checks.size() << " identities\n";
    return failures;
}

}  // namespace chilab
