#include "chilab/fold.hpp"

#include <stdexcept>

namespace chilab {

Rational FoldTrace::start_length() const {
    if (steps.empty()) throw std::logic_error("empty fold trace");
    return steps.front().before;
}

Rational FoldTrace::final_length() const {
    if (steps.empty()) throw std::logic_error("empty fold trace");
    return steps.back().after;
}

FoldSession::FoldSession(const Rational& start) : length_(start) {
    if (start.sign() <= 0) throw std::invalid_argument("strip length must be positive");
    trace_.steps.push_back({"start", start, start});
}

void FoldSession::reciprocal() {
    Rational after = length_.inverse();
    trace_.steps.push_back({"reciprocal", length_, after});
    length_ = after;
}

void FoldSession::add_square(int count) {
    if (count < 1) throw std::invalid_argument("square count must be >= 1");
    for (int i = 0; i < count; ++i) {
        Rational after = length_ + Rational(1);
        trace_.steps.push_back({"add_square", length_, after});
        length_ = after;
    }
}

void FoldSession::add_strip(const Rational& piece) {
    if (piece.sign() <= 0) throw std::invalid_argument("strip piece must be positive");
    Rational after = length_ + piece;
    trace_.steps.push_back({"add_strip", length_, after});
    length_ = after;
}

Rational replay(const FoldTrace& trace) {
    Rational len = trace.start_length();
    for (const FoldStep& s : trace.steps) {
        if (!(s.before == len))
            throw std::logic_error("trace step '" + s.op + "' expects length " +
                                   s.before.to_string() + " but replay is at " + len.to_string());
        if (s.op == "start") len = s.after;
        else if (s.op == "reciprocal") len = len.inverse();
        else if (s.op == "add_square") len = len + Rational(1);
        else if (s.op == "add_strip") len = s.after;  // piece is implied by the record
        else throw std::logic_error("unknown fold op '" + s.op + "'");
        if (!(len == s.after))
            throw std::logic_error("trace step '" + s.op + "' recorded " + s.after.to_string() +
                                   " but replay computes " + len.to_string());
    }
    return len;
}

FoldResult fold_cf(int n, int depth) {
    if (n < 1) throw std::invalid_argument("strip length must be a positive integer");
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    FoldSession s{Rational(n)};
    for (int d = 0; d < depth; ++d) {
        s.reciprocal();
        s.add_square(n);
    }
    return {s.length(), s.take_trace()};
}

FoldResult fold_golden_from(const Rational& start, int depth) {
    if (depth < 0) throw std::invalid_argument("depth must be >= 0");
    FoldSession s{start};
    for (int d = 0; d < depth; ++d) {
        s.reciprocal();
        s.add_square();
    }
    return {s.length(), s.take_trace()};
}

HarmonicResult fold_harmonic(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("harmonic fold needs positive integers");
    FoldSession s{Rational(m)};
    s.reciprocal();
    s.add_strip(Rational(Integer(1), Integer(n)));
    HarmonicResult out{s.length(), Rational(2) / s.length(), s.take_trace()};
    return out;
}

}  // namespace chilab
