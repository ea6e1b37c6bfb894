#pragma once

#include <string>
#include <vector>

#include "chilab/rational.hpp"

namespace chilab {

// One paper-strip move.  Lengths are exact positive rationals throughout:
//   start       before = after = initial strip length
//   reciprocal  after = 1/before   (fold mapping the mark to the unit)
//   add_square  after = before + 1 (glue a unit square)
//   add_strip   after = before + piece
struct FoldStep {
    std::string op;
    Rational before;
    Rational after;
};

struct FoldTrace {
    std::vector<FoldStep> steps;

    Rational start_length() const;
    Rational final_length() const;
};

// Running fold with its trace.  Construction and every op validate that the
// current length stays positive.
class FoldSession {
public:
    explicit FoldSession(const Rational& start);

    void reciprocal();
    void add_square(int count = 1);
    void add_strip(const Rational& piece);  // piece > 0

    const Rational& length() const { return length_; }
    const FoldTrace& trace() const { return trace_; }
    FoldTrace take_trace() { return std::move(trace_); }

private:
    Rational length_;
    FoldTrace trace_;
};

// Re-applies a trace step by step from its own start value; throws
// std::logic_error if any step's recorded before/after doesn't match the
// recomputed length.  Returns the final length.
Rational replay(const FoldTrace& trace);

struct FoldResult {
    Rational value;
    FoldTrace trace;
};

// depth cycles of (reciprocal, then n unit squares) from a strip of length n:
// the classic continued-fraction folding.  fold_cf(n, d) ends on the
// (d+1)-th convergent of the chain c_1 = n, c_{k+1} = n + 1/c_k.
FoldResult fold_cf(int n, int depth);

// Golden folding from an arbitrary positive start: depth cycles of
// (reciprocal, one square), i.e. y -> 1 + 1/y; converges to phi.
FoldResult fold_golden_from(const Rational& start, int depth);

// Harmonic-mean folding: mark 1/m from a strip of integer length m, add a
// 1/n strip; the folded length is 1/m + 1/n = (m+n)/mn and the harmonic mean
// H = 2mn/(m+n) is its reciprocal doubled.
struct HarmonicResult {
    Rational sum_recip;  // (m+n)/mn, the final folded length
    Rational harmonic;   // 2mn/(m+n)
    FoldTrace trace;
};
HarmonicResult fold_harmonic(int m, int n);

}  // namespace chilab
