#pragma once

#include <string>
#include <variant>

#include "chilab/tower.hpp"

namespace chilab {

// Closed set of exactly-representable values: rationals, elements of
// Q(sqrt(5)), and one radical level above it.  Arithmetic lifts operands to
// the smallest common kind; results demote back when coefficients vanish
// (a tower whose q collapsed is returned as a golden, a golden with a = 0 as
// a rational).
using Value = std::variant<Rational, GoldenElem, TowerElem>;

enum class ValueKind { rational, golden, tower };

ValueKind kind_of(const Value& v);

// Lowest faithful kind for the same value.
Value demote(const Value& v);

GoldenElem as_golden(const Value& v);  // requires kind rational or golden
TowerElem as_tower(const Value& v);

Value value_add(const Value& x, const Value& y);
Value value_sub(const Value& x, const Value& y);
Value value_mul(const Value& x, const Value& y);
Value value_div(const Value& x, const Value& y);
Value value_neg(const Value& x);
Value value_inverse(const Value& x);

bool is_zero(const Value& v);
int sign(const Value& v);

// Exact value equality.  Works across kinds and across different radicand
// representations (merging when the product of radicands is a perfect golden
// square); incompatible radicands are provably unequal, so this never throws.
bool value_eq(const Value& x, const Value& y);

// -1 / 0 / +1 for x < y / x == y / x > y.  Exact when the difference is
// representable; across incompatible radicands (where value_eq is already
// false) it separates the values by interval refinement at doubling
// precision, which terminates because the values differ.
int value_compare(const Value& x, const Value& y);

RatInterval value_bounds(const Value& v, int digits);

// Debug/display form ("phi", "(1/2*phi-1/2) + (1/4)*sqrt(-4*phi+24)", ...).
std::string to_string(const Value& v);

}  // namespace chilab
