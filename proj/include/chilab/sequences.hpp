#pragma once

#include <vector>

#include "chilab/decimal.hpp"
#include "chilab/value.hpp"

namespace chilab {

// Continued-fraction style chain c_1 = seed, c_{k+1} = term + 1/c_k.
// term and seed must be positive rationals or golden elements (the chain
// then stays exactly representable); count >= 1 convergents are returned.
struct CFConfig {
    Value term;
    Value seed;
    int count = 0;
};
std::vector<Value> cf_convergents(const CFConfig& config);

// Fibonacci numbers F_1..F_{count+1} and the ratios F_{k+1}/F_k as exact
// rationals; element-for-element the same chain as term = seed = 1.
struct FibonacciRatios {
    std::vector<Integer> numbers;
    std::vector<Rational> ratios;
};
FibonacciRatios fibonacci_ratios(int count);

// The H sequence: phi+1, 2, 2*phi+1, then (a*phi+b),(c*phi+d) ->
// (a+c+d)*phi + (b+c) applied to consecutive terms.  The value recurrence is
// H_{k+1} = phi*H_k + H_{k-1} from the third term on, so the consecutive
// ratios converge to chi'.  All terms have non-negative integer coefficients.
std::vector<GoldenElem> h_sequence(int count);

// Exact consecutive ratios H_{k+1}/H_k (count-1 golden elements).
std::vector<GoldenElem> h_ratio_convergence(int count);

// Same seeds with plain componentwise (Fibonacci-style) addition instead:
// phi+1, 2, phi+3, phi+5, ...; ratios converge to phi, not chi'.
std::vector<GoldenElem> h_sequence_alt_rule(int count);

// Nested radical x_{j+1} = sqrt(1 + c * x_j) from x_0 = start; the list holds
// x_1..x_count.  Each iterate is carried as a certified enclosure plus a
// truncated decimal at `digits` places (the whole chain re-runs at doubled
// working precision until every element's truncation is pinned).
struct RadicalConfig {
    Value coefficient;  // positive rational or golden
    Rational start;     // >= 0
    int count = 0;
};
struct RadicalStep {
    RatInterval bounds;
    DecimalApprox approx;
};
std::vector<RadicalStep> nested_radical(const RadicalConfig& config, int digits);

}  // namespace chilab
