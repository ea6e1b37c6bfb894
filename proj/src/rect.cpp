#include "chilab/rect.hpp"

#include <stdexcept>

namespace chilab {

namespace {
void require_ratio_at_least_one(const Value& rho) {
    if (sign(value_sub(rho, Value(Rational(1)))) < 0)
        throw std::invalid_argument("ratio must be >= 1");
}

Value extend_exact(const GoldenElem& g, ExtendBranch branch) {
    GoldenElem one{Rational(0), Rational(1)};
    GoldenElem half{Rational(0), Rational(1, 2)};
    if (branch == ExtendBranch::above_phi) {
        GoldenElem r = g * g + GoldenElem{Rational(0), Rational(4)};
        return demote(Value(TowerElem(g * half, half, r)));
    }
    GoldenElem inv2g = (g + g).inverse();
    GoldenElem r = one + GoldenElem{Rational(0), Rational(4)} * (g * g);
    return demote(Value(TowerElem(inv2g, inv2g, r)));
}
}  // namespace

RatInterval extend_ratio_bounds(const RatInterval& rho, ExtendBranch branch, int working_digits) {
    RatInterval sq = iv_mul(rho, rho);
    if (branch == ExtendBranch::above_phi) {
        RatInterval root = iv_sqrt(iv_offset(sq, Rational(4)), working_digits);
        return iv_scale(iv_add(rho, root), Rational(1, 2));
    }
    RatInterval root = iv_sqrt(iv_offset(iv_scale(sq, Rational(4)), Rational(1)), working_digits);
    return iv_div(iv_offset(root, Rational(1)), iv_scale(rho, Rational(2)));
}

ExtendResult extend_ratio(const Value& rho, ExtendBranch branch, int digits) {
    require_ratio_at_least_one(rho);
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");
    Value r = demote(rho);
    ExtendResult out;
    if (kind_of(r) != ValueKind::tower) {
        Value x = extend_exact(as_golden(r), branch);
        out.exact = x;
        out.bounds = value_bounds(x, digits + 6);
        out.approx = eval_decimal(x, digits);
        return out;
    }
    const TowerElem& t = std::get<TowerElem>(r);
    out.bounds = extend_ratio_bounds(tower_bounds(t, digits + 6), branch, digits + 6);
    out.approx = eval_decimal_refining(
        [&](int working) {
            return extend_ratio_bounds(tower_bounds(t, working), branch, working);
        },
        digits);
    return out;
}

Subdivision subdivide(const Value& x) {
    if (sign(value_sub(x, Value(Rational(1)))) <= 0)
        throw std::invalid_argument("subdivision needs a ratio > 1");
    Value zero{Rational(0)}, one{Rational(1)};
    Value inv = value_inverse(x);
    Value x2 = value_mul(x, x);
    Value den = value_add(x2, one);
    Subdivision s;
    s.whole_length = x;
    s.kept_length = value_sub(x, inv);
    s.strip_width = inv;
    s.diag_a = {zero, zero};
    s.diag_b = {x, one};
    s.perp_a = {x, zero};
    s.perp_b = {s.kept_length, one};
    s.foot = {value_div(value_mul(x2, x), den), value_div(x2, den)};
    return s;
}

std::vector<ExtendStep> extend_sequence(int count, int digits) {
    if (count < 0) throw std::invalid_argument("count must be >= 0");
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");

    std::vector<Value> exact_prefix{Value(Rational(1))};
    while (static_cast<int>(exact_prefix.size()) <= count &&
           kind_of(exact_prefix.back()) != ValueKind::tower) {
        ExtendResult next = extend_ratio(exact_prefix.back(), ExtendBranch::below_phi, digits);
        exact_prefix.push_back(*next.exact);
    }
    if (static_cast<int>(exact_prefix.size()) > count + 1) exact_prefix.resize(count + 1);

    std::vector<ExtendStep> steps;
    steps.reserve(static_cast<size_t>(count) + 1);
    for (const Value& v : exact_prefix)
        steps.push_back({v, value_bounds(v, digits + 6), eval_decimal(v, digits)});

    int remaining = count + 1 - static_cast<int>(steps.size());
    if (remaining <= 0) return steps;

    for (int working = digits + 6;; working *= 2) {
        std::vector<ExtendStep> tail;
        tail.reserve(static_cast<size_t>(remaining));
        RatInterval x = value_bounds(exact_prefix.back(), working);
        bool pinned = true;
        for (int j = 0; j < remaining; ++j) {
            x = extend_ratio_bounds(x, ExtendBranch::below_phi, working);
            ExtendStep step{std::nullopt, x, {}};
            if (!try_truncate(x, digits, step.approx)) {
                pinned = false;
                break;
            }
            tail.push_back(std::move(step));
        }
        if (pinned) {
            steps.insert(steps.end(), tail.begin(), tail.end());
            return steps;
        }
    }
}

}  // namespace chilab
