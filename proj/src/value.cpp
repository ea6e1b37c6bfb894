#include "chilab/value.hpp"

#include <utility>

namespace chilab {

ValueKind kind_of(const Value& v) {
    if (std::holds_alternative<Rational>(v)) return ValueKind::rational;
    if (std::holds_alternative<GoldenElem>(v)) return ValueKind::golden;
    return ValueKind::tower;
}

Value demote(const Value& v) {
    if (const auto* t = std::get_if<TowerElem>(&v)) {
        if (!t->is_golden()) return v;
        if (t->p.is_rational()) return t->p.b;
        return t->p;
    }
    if (const auto* g = std::get_if<GoldenElem>(&v)) {
        if (g->is_rational()) return g->b;
        return v;
    }
    return v;
}

GoldenElem as_golden(const Value& v) {
    if (const auto* r = std::get_if<Rational>(&v)) return GoldenElem::from_rational(*r);
    if (const auto* g = std::get_if<GoldenElem>(&v)) return *g;
    const auto& t = std::get<TowerElem>(v);
    if (!t.is_golden()) throw std::domain_error("value is not in Q(sqrt(5))");
    return t.p;
}

TowerElem as_tower(const Value& v) {
    if (const auto* t = std::get_if<TowerElem>(&v)) return *t;
    return TowerElem::from_golden(as_golden(v));
}

namespace {
template <typename Op>
Value binop(const Value& x, const Value& y, Op op) {
    return demote(Value(op(as_tower(x), as_tower(y))));
}
}  // namespace

Value value_add(const Value& x, const Value& y) { return binop(x, y, tower_add); }
Value value_sub(const Value& x, const Value& y) { return binop(x, y, tower_sub); }
Value value_mul(const Value& x, const Value& y) { return binop(x, y, tower_mul); }
Value value_div(const Value& x, const Value& y) { return binop(x, y, tower_div); }

Value value_neg(const Value& x) { return demote(Value(tower_neg(as_tower(x)))); }
Value value_inverse(const Value& x) { return demote(Value(tower_inverse(as_tower(x)))); }

bool is_zero(const Value& v) {
    return std::visit([](const auto& x) { return x.is_zero(); }, v);
}

int sign(const Value& v) {
    return std::visit([](const auto& x) { return sign(x); }, v);
}

bool value_eq(const Value& x, const Value& y) {
    TowerElem tx = as_tower(x), ty = as_tower(y);
    auto merged = tower_merge(tx, ty);
    if (!merged) return false;  // incompatible radicands cannot hide equality
    return tower_sub(merged->first, merged->second).is_zero();
}

int value_compare(const Value& x, const Value& y) {
    TowerElem tx = as_tower(x), ty = as_tower(y);
    if (auto merged = tower_merge(tx, ty)) {
        return sign(tower_sub(merged->first, merged->second));
    }
    // Provably unequal; refine enclosures until they separate.
    for (int digits = 16;; digits *= 2) {
        RatInterval bx = tower_bounds(tx, digits);
        RatInterval by = tower_bounds(ty, digits);
        if (bx.hi < by.lo) return -1;
        if (by.hi < bx.lo) return 1;
    }
}

RatInterval value_bounds(const Value& v, int digits) {
    if (const auto* r = std::get_if<Rational>(&v)) return RatInterval::point(*r);
    if (const auto* g = std::get_if<GoldenElem>(&v)) return golden_bounds(*g, digits);
    return tower_bounds(std::get<TowerElem>(v), digits);
}

std::string to_string(const Value& v) {
    return std::visit([](const auto& x) { return x.to_string(); }, v);
}

}  // namespace chilab
