#include "chilab/sequences.hpp"

#include <stdexcept>

namespace chilab {

namespace {
void require_positive_scalar(const Value& v, const char* what) {
    ValueKind k = kind_of(demote(v));
    if (k == ValueKind::tower)
        throw std::invalid_argument(std::string(what) + " must be rational or golden");
    if (sign(v) <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
}
}  // namespace

std::vector<Value> cf_convergents(const CFConfig& config) {
    require_positive_scalar(config.term, "term");
    require_positive_scalar(config.seed, "seed");
    if (config.count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<Value> out;
    out.reserve(static_cast<size_t>(config.count));
    Value c = demote(config.seed);
    out.push_back(c);
    for (int k = 1; k < config.count; ++k) {
        c = value_add(config.term, value_inverse(c));
        out.push_back(c);
    }
    return out;
}

FibonacciRatios fibonacci_ratios(int count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    FibonacciRatios out;
    Integer a = 1, b = 1;  // F_1, F_2
    out.numbers.push_back(a);
    for (int k = 0; k < count; ++k) {
        out.numbers.push_back(b);
        out.ratios.emplace_back(b, a);
        Integer next = a + b;
        a = b;
        b = next;
    }
    return out;
}

std::vector<GoldenElem> h_sequence(int count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<GoldenElem> h = {{Rational(1), Rational(1)},   // phi + 1
                                 {Rational(0), Rational(2)},   // 2
                                 {Rational(2), Rational(1)}};  // 2*phi + 1
    while (static_cast<int>(h.size()) < count) {
        const GoldenElem& prev = h[h.size() - 2];
        const GoldenElem& cur = h.back();
        h.push_back({prev.a + cur.a + cur.b, prev.b + cur.a});
    }
    h.resize(static_cast<size_t>(count));
    return h;
}

std::vector<GoldenElem> h_ratio_convergence(int count) {
    if (count < 2) throw std::invalid_argument("count must be >= 2");
    std::vector<GoldenElem> h = h_sequence(count);
    std::vector<GoldenElem> ratios;
    ratios.reserve(h.size() - 1);
    for (size_t k = 1; k < h.size(); ++k) ratios.push_back(h[k] / h[k - 1]);
    return ratios;
}

std::vector<GoldenElem> h_sequence_alt_rule(int count) {
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    std::vector<GoldenElem> h = {{Rational(1), Rational(1)}, {Rational(0), Rational(2)}};
    while (static_cast<int>(h.size()) < count) {
        const GoldenElem& prev = h[h.size() - 2];
        const GoldenElem& cur = h.back();
        h.push_back(prev + cur);
    }
    h.resize(static_cast<size_t>(count));
    return h;
}

std::vector<RadicalStep> nested_radical(const RadicalConfig& config, int digits) {
    require_positive_scalar(config.coefficient, "coefficient");
    if (config.start.sign() < 0) throw std::invalid_argument("start must be >= 0");
    if (config.count < 1) throw std::invalid_argument("count must be >= 1");
    if (digits < 1) throw std::invalid_argument("digits must be >= 1");

    for (int working = digits + 6;; working *= 2) {
        RatInterval c = value_bounds(config.coefficient, working);
        std::vector<RadicalStep> steps;
        steps.reserve(static_cast<size_t>(config.count));
        RatInterval x = RatInterval::point(config.start);
        bool pinned = true;
        for (int j = 0; j < config.count; ++j) {
            x = iv_sqrt(iv_offset(iv_mul(c, x), Rational(1)), working);
            RadicalStep step{x, {}};
            if (!try_truncate(x, digits, step.approx)) {
                pinned = false;
                break;
            }
            steps.push_back(std::move(step));
        }
        if (pinned) return steps;
    }
}

}  // namespace chilab
