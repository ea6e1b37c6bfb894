#pragma once

#include <string>

#include "chilab/value.hpp"

namespace chilab {

// Certified decimal approximation: `digits` is the truncation (toward zero)
// of the value to the requested number of fractional places, and the true
// value differs from the printed one by less than error_bound, itself an
// exact rational strictly below 10^-places.
struct DecimalApprox {
    std::string digits;
    Rational error_bound;
    Rational truncated;  // the printed string as an exact rational
};

// Truncation of an exact rational toward zero at `places` fractional digits,
// e.g. (-107/64, 3) -> "-1.671".  places >= 0; no decimal point when 0.
std::string format_rational_fixed(const Rational& x, int places);

// Certified evaluation.  Rational values truncate exactly; irrational ones
// are enclosed by interval refinement at doubling working precision until
// the enclosure is narrower than 10^-(places+2) and both endpoints truncate
// to the same string (always reachable: an irrational value never sits on a
// decimal boundary).
DecimalApprox eval_decimal(const Value& v, int places);

// Same refinement loop, driven by a caller-supplied enclosure generator
// (for values only available as intervals, e.g. nested-radical iterates).
// The generator must yield enclosures of one fixed real number whose width
// tends to 0 as the precision argument grows.
template <typename Gen>
DecimalApprox eval_decimal_refining(Gen&& enclose, int places);

// Internal helper shared by the two drivers: accepts an enclosure, returns
// whether it pins down the truncation, filling `out` if so.
bool try_truncate(const RatInterval& iv, int places, DecimalApprox& out);

template <typename Gen>
DecimalApprox eval_decimal_refining(Gen&& enclose, int places) {
    DecimalApprox out;
    for (int working = places + 4;; working *= 2) {
        if (try_truncate(enclose(working), places, out)) return out;
    }
}

}  // namespace chilab
