#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chilab/constants.hpp"
#include "chilab/sequences.hpp"
#include "oracle.hpp"

using namespace chilab;

namespace {
GoldenElem g(long long a, long long b) { return {Rational(a), Rational(b)}; }

Value abs_diff(const Value& x, const Value& y) {
    Value d = value_sub(x, y);
    return sign(d) < 0 ? value_neg(d) : d;
}

bool within(const Value& x, const Value& target, int neg_pow10) {
    return value_compare(abs_diff(x, target), Value(Rational(Integer(1), pow10(neg_pow10)))) < 0;
}
}  // namespace

TEST_CASE("cf chain with rational term reproduces the classic convergents") {
    // term 1, seeded one step in: 2, 3/2, 5/3, 8/5, ...
    std::vector<Value> cf = cf_convergents({Value(Rational(1)), Value(Rational(2)), 4});
    REQUIRE(cf.size() == 4);
    CHECK(value_eq(cf[0], Value(Rational(2))));
    CHECK(value_eq(cf[1], Value(Rational(3, 2))));
    CHECK(value_eq(cf[2], Value(Rational(5, 3))));
    CHECK(value_eq(cf[3], Value(Rational(8, 5))));
    CHECK(kind_of(cf[3]) == ValueKind::rational);
}

TEST_CASE("cf chain equals fibonacci ratios element for element") {
    FibonacciRatios fib = fibonacci_ratios(25);
    REQUIRE(fib.numbers.size() == 26);
    REQUIRE(fib.ratios.size() == 25);
    CHECK(fib.numbers[19] == 6765);   // F_20
    CHECK(fib.numbers[20] == 10946);  // F_21
    std::vector<Value> cf = cf_convergents({Value(Rational(1)), Value(Rational(1)), 25});
    for (size_t k = 0; k < cf.size(); ++k) CHECK(value_eq(cf[k], Value(fib.ratios[k])));
    // F_{k+1}/F_k approaches phi: |r_20 - phi| = 1/(F_20 F_21) < 1e-7
    CHECK(within(Value(fib.ratios[19]), Value(phi()), 7));
}

TEST_CASE("cf chain with golden term stays inside the golden field") {
    std::vector<Value> cf = cf_convergents({Value(phi()), Value(g(1, 1)), 16});
    for (const Value& c : cf) CHECK(kind_of(c) != ValueKind::tower);
    // the seed phi + 1 = phi^2 makes the second term collapse to a rational:
    // c_2 = phi + 1/phi^2 = phi + (2 - phi) = 2
    CHECK(kind_of(cf[1]) == ValueKind::rational);
    CHECK(value_eq(cf[1], Value(Rational(2))));
    CHECK(kind_of(cf[2]) == ValueKind::golden);  // c_3 = phi + 1/2
    // closed-over recurrence: c_{k+1} = phi + 1/c_k
    for (size_t k = 0; k + 1 < cf.size(); ++k)
        CHECK(value_eq(cf[k + 1], value_add(Value(phi()), value_inverse(cf[k]))));
    // converges toward chi_prime at rate 1/chi_prime^2 per step
    CHECK(within(cf.back(), Value(chi_prime()), 8));
}

TEST_CASE("cf validation") {
    CHECK_THROWS_AS(cf_convergents({Value(Rational(0)), Value(Rational(1)), 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cf_convergents({Value(Rational(-1)), Value(Rational(1)), 3}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cf_convergents({Value(Rational(1)), Value(Rational(1)), 0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(cf_convergents({Value(chi()), Value(Rational(1)), 3}),
                    std::invalid_argument);  // tower term not allowed
}

TEST_CASE("H sequence matches the derived coefficient table") {
    std::vector<GoldenElem> h = h_sequence(8);
    REQUIRE(h.size() == 8);
    CHECK(h[0] == g(1, 1));
    CHECK(h[1] == g(0, 2));
    CHECK(h[2] == g(2, 1));
    CHECK(h[3] == g(3, 4));
    CHECK(h[4] == g(9, 4));
    CHECK(h[5] == g(16, 13));
    CHECK(h[6] == g(38, 20));
    CHECK(h[7] == g(74, 51));
}

TEST_CASE("H sequence 3-place decimals (exact truncations)") {
    std::vector<GoldenElem> h = h_sequence(8);
    const char* expected[] = {"2.618", "2.000", "4.236",  "8.854",
                              "18.562", "38.888", "81.485", "170.734"};
    for (size_t k = 0; k < 8; ++k)
        CHECK(eval_decimal(Value(h[k]), 3).digits == expected[k]);
}

TEST_CASE("low-precision phi arithmetic reproduces the historical 3-place strings") {
    // Computing H_7 = 38 phi + 20 and H_8 = 74 phi + 51 with phi ~ 1.618
    // (3-place truncation) gives 81.484 and 170.732 instead of the true
    // truncations 81.485 and 170.734 -- a precision artifact, not a
    // different sequence.
    Rational phi3(1618, 1000);
    CHECK(oracle::truncate(Rational(38) * phi3 + Rational(20), 3) == "81.484");
    CHECK(oracle::truncate(Rational(74) * phi3 + Rational(51), 3) == "170.732");
    // with 6-place phi the artifact disappears
    Rational phi6(1618033, 1000000);
    CHECK(oracle::truncate(Rational(38) * phi6 + Rational(20), 3) == "81.485");
    CHECK(oracle::truncate(Rational(74) * phi6 + Rational(51), 3) == "170.734");
}

TEST_CASE("H terms satisfy the golden recurrence and have integer coefficients") {
    std::vector<GoldenElem> h = h_sequence(25);
    for (size_t k = 3; k < h.size(); ++k)
        CHECK(h[k] == GoldenElem(phi()) * h[k - 1] + h[k - 2]);
    for (const GoldenElem& t : h) {
        CHECK(t.a.is_integer());
        CHECK(t.b.is_integer());
        CHECK(t.a.sign() >= 0);
        CHECK(t.b.sign() >= 0);
    }
}

TEST_CASE("H ratios converge to chi_prime") {
    std::vector<GoldenElem> r = h_ratio_convergence(22);
    REQUIRE(r.size() == 21);
    // each ratio is exactly phi + 1/previous from the third term on
    for (size_t k = 2; k < r.size(); ++k)
        CHECK(r[k] == GoldenElem(phi()) + r[k - 1].inverse());
    CHECK(within(Value(r[20]), Value(chi_prime()), 10));
    // ratios alternate around the limit
    int below = value_compare(Value(r[5]), Value(chi_prime()));
    CHECK(value_compare(Value(r[6]), Value(chi_prime())) == -below);
}

TEST_CASE("H ratios equal the golden cf chain at matching indices") {
    std::vector<GoldenElem> r = h_ratio_convergence(16);  // r[j] = H_{j+2}/H_{j+1}
    std::vector<Value> cf = cf_convergents({Value(phi()), Value(r[1]), 12});
    for (size_t j = 0; j < cf.size(); ++j) CHECK(value_eq(cf[j], Value(r[j + 1])));
}

TEST_CASE("alternative componentwise rule gives the phi-bound sequence") {
    std::vector<GoldenElem> h = h_sequence_alt_rule(4);
    REQUIRE(h.size() == 4);
    CHECK(h[0] == g(1, 1));
    CHECK(h[1] == g(0, 2));
    CHECK(h[2] == g(1, 3));
    CHECK(h[3] == g(1, 5));
    // ratios converge to phi, not chi_prime
    std::vector<GoldenElem> long_run = h_sequence_alt_rule(42);
    GoldenElem ratio = long_run[41] / long_run[40];
    CHECK(within(Value(ratio), Value(phi()), 10));
}

TEST_CASE("nested radical with c = 1 walks to phi") {
    std::vector<RadicalStep> steps = nested_radical({Value(Rational(1)), Rational(1), 40}, 12);
    REQUIRE(steps.size() == 40);
    CHECK(steps[0].approx.digits.substr(0, 5) == "1.414");  // x_1 = sqrt(2)
    CHECK(steps[1].approx.digits.substr(0, 5) == "1.553");  // x_2 = sqrt(1 + sqrt 2)
    CHECK(within(Value(steps.back().approx.truncated), Value(phi()), 10));
    for (const RadicalStep& s : steps) {
        CHECK(s.bounds.lo <= s.approx.truncated + s.approx.error_bound);
        CHECK(s.approx.truncated - s.approx.error_bound <= s.bounds.hi);
        CHECK(s.bounds.width() < Rational(Integer(1), pow10(12)));
    }
}

TEST_CASE("nested radical with golden coefficient 1/phi walks to chi") {
    std::vector<RadicalStep> steps = nested_radical({Value(inv_phi()), Rational(1), 60}, 14);
    CHECK(within(Value(steps.back().approx.truncated), Value(chi()), 10));
}

TEST_CASE("nested radical keeps exact iterates exact") {
    // c = 3, start = 5: x_1 = sqrt(16) = 4 exactly, then sqrt(13) is irrational
    std::vector<RadicalStep> steps = nested_radical({Value(Rational(3)), Rational(5), 2}, 10);
    CHECK(steps[0].bounds.is_point());
    CHECK(steps[0].bounds.lo == Rational(4));
    CHECK(steps[0].approx.digits == "4.0000000000");
    CHECK(steps[0].approx.error_bound == Rational(0));
    CHECK(!steps[1].bounds.is_point());
    CHECK(steps[1].approx.digits.substr(0, 6) == "3.6055");  // sqrt(13)
}

TEST_CASE("nested radical validation") {
    CHECK_THROWS_AS(nested_radical({Value(Rational(0)), Rational(1), 3}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(nested_radical({Value(Rational(1)), Rational(-1), 3}, 5),
                    std::invalid_argument);
    CHECK_THROWS_AS(nested_radical({Value(chi()), Rational(1), 3}, 5), std::invalid_argument);
    CHECK_THROWS_AS(nested_radical({Value(Rational(1)), Rational(1), 0}, 5),
                    std::invalid_argument);
}

TEST_CASE("three constructions of chi agree to 1e-20") {
    // closed form vs the golden cf chain vs the nested radical, all
    // compared at 30 certified places.
    Rational tol(Integer(1), pow10(20));

    std::vector<GoldenElem> r = h_ratio_convergence(16);
    std::vector<Value> cf = cf_convergents({Value(inv_phi()), Value(inv_phi()), 80});
    // the 1/phi chain converges to chi (chi = 1/phi + 1/chi)
    Rational cf_dec = eval_decimal(cf.back(), 30).truncated;
    Rational closed_dec = eval_decimal(Value(chi()), 30).truncated;
    CHECK((cf_dec - closed_dec).abs() < tol);

    std::vector<RadicalStep> rad = nested_radical({Value(inv_phi()), Rational(1), 80}, 30);
    Rational rad_dec = rad.back().approx.truncated;
    CHECK((rad_dec - closed_dec).abs() < tol);
    CHECK((rad_dec - cf_dec).abs() < tol);
}

TEST_CASE("three constructions of phi agree to 1e-20") {
    Rational tol(Integer(1), pow10(20));
    std::vector<Value> cf = cf_convergents({Value(Rational(1)), Value(Rational(1)), 80});
    Rational cf_dec = eval_decimal(cf.back(), 30).truncated;
    Rational closed_dec = eval_decimal(Value(phi()), 30).truncated;
    std::vector<RadicalStep> rad = nested_radical({Value(Rational(1)), Rational(1), 80}, 30);
    Rational rad_dec = rad.back().approx.truncated;
    CHECK((cf_dec - closed_dec).abs() < tol);
    CHECK((rad_dec - closed_dec).abs() < tol);
    CHECK((rad_dec - cf_dec).abs() < tol);
}
