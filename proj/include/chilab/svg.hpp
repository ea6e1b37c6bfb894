#pragma once

#include <string>
#include <vector>

#include "chilab/fold.hpp"
#include "chilab/rect.hpp"
#include "chilab/value.hpp"

namespace chilab {

// Shared figure styling.  The defaults are fixed so that rendering is
// reproducible byte for byte (the golden-file tests depend on them).
struct RenderStyle {
    int unit_px = 100;                 // pixels per unit length, >= 10
    Rational stroke_px = Rational(3, 2);
    std::string grey_fill = "#cccccc";
    std::string dash_pattern = "6 4";
};

// All renderers emit standalone SVG documents and are fully deterministic:
// every coordinate is an exact rational (irrational values enter through
// their certified 12-place truncation) formatted at fixed precision, so
// equal inputs give byte-identical output.

// Diagonal-perpendicular subdivision of an x:1 rectangle: exactly three
// <rect> elements (whole outline, the kept piece filled grey, the
// reciprocal strip outlined dashed) and two <line> elements (diagonal and
// the perpendicular from the off-diagonal vertex), plus length annotations.
std::string render_subdivision_svg(const Value& x, const RenderStyle& style = {});

// The extension chain x_0..x_count (count >= 2) as nested rectangles
// sharing the unit side, each right edge annotated with the 3-place
// decimal of its length.
std::string render_extend_svg(int count, const RenderStyle& style = {});

// One panel per fold step (trace must be non-empty): the strip before the
// move filled grey, the strip after it outlined on top, the crease drawn
// dashed at the fold/glue boundary, and the exact length annotated.
std::string render_fold_svg(const FoldTrace& trace, const RenderStyle& style = {});

// Straightedge-compass figures for phi and chi.  The construction is
// exposed as data so its exactness can be checked independently of the
// rendering: labeled points in unit coordinates, plus the result segment
// whose length equals the target exactly.
enum class ConstructionTarget { phi, chi };

struct ConstructionPoint {
    std::string label;
    Value x, y;
};

struct ConstructionData {
    std::vector<ConstructionPoint> points;
    Value arc_center_x, arc_center_y;  // one circular arc per figure
    Value arc_radius;
    Value result_from_x, result_to_x, result_y;  // horizontal result segment
    Value result_length;                         // to - from, equals the target
    std::string label;                           // "phi" or "chi"
};
ConstructionData construction_data(ConstructionTarget target);

std::string render_construction_svg(ConstructionTarget target, const RenderStyle& style = {});

}  // namespace chilab
