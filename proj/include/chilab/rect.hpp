#pragma once

#include <array>
#include <optional>
#include <vector>

#include "chilab/decimal.hpp"
#include "chilab/value.hpp"

namespace chilab {

// Extension of a rectangle ratio rho >= 1 to the ratio x of the rectangle
// whose diagonal-perpendicular subdivision relates back to rho:
//   above_phi: x - 1/x = rho      =>  x = (rho + sqrt(rho^2 + 4)) / 2 >= phi
//   below_phi: x - 1/x = 1/rho    =>  x = (1 + sqrt(1 + 4 rho^2)) / (2 rho),
//              1 <= x <= phi
// rho = 1 gives phi on both branches; rho = phi on the lower branch gives chi.
enum class ExtendBranch { below_phi, above_phi };

// `exact` is set when rho itself is rational or golden (the result then lives
// one radical level up); a tower-valued rho can't be extended exactly, so
// only the certified enclosure and decimal are produced.
struct ExtendResult {
    std::optional<Value> exact;
    RatInterval bounds;
    DecimalApprox approx;
};
ExtendResult extend_ratio(const Value& rho, ExtendBranch branch, int digits = 12);

// Enclosure form of the same map, for iterating past the exact kinds.
RatInterval extend_ratio_bounds(const RatInterval& rho, ExtendBranch branch, int working_digits);

// Diagonal-perpendicular subdivision of an x:1 rectangle (corners (0,0) and
// (x,1), x > 1): the perpendicular from (x,0) to the diagonal, extended to
// the top edge, cuts off a strip of width 1/x and keeps an (x - 1/x) x 1
// piece.  All coordinates are exact.
struct Subdivision {
    Value whole_length;
    Value kept_length;   // x - 1/x
    Value strip_width;   // 1/x
    std::array<Value, 2> diag_a, diag_b;  // (0,0) -> (x,1)
    std::array<Value, 2> perp_a, perp_b;  // (x,0) -> (x - 1/x, 1)
    std::array<Value, 2> foot;            // perpendicular meets diagonal
};
Subdivision subdivide(const Value& x);

// The extension chain x_0 = 1, x_{k+1} = extend_ratio(x_k, below_phi):
// 1, phi, chi, ... converging to sqrt(2) (the fixed point of x - 1/x = 1/x).
// The first three elements are exact; beyond chi the values leave the tower
// and are carried as certified enclosures.
struct ExtendStep {
    std::optional<Value> exact;
    RatInterval bounds;
    DecimalApprox approx;
};
// Returns x_0..x_count (count + 1 elements), decimals at `digits` places.
std::vector<ExtendStep> extend_sequence(int count, int digits);

}  // namespace chilab
