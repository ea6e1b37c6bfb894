#include "chilab/svg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "chilab/constants.hpp"
#include "chilab/decimal.hpp"

namespace chilab {

namespace {

constexpr const char* kInk = "#222222";
constexpr const char* kGuide = "#555555";
constexpr const char* kAccent = "#aa3333";

std::string px(const Rational& r) { return format_rational_fixed(r, 3); }

// Stroke widths print with trailing zeros trimmed ("1.5", not "1.500").
std::string stroke_str(const Rational& r) {
    std::string s = format_rational_fixed(r, 3);
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s;
}

// Truncation to the 3-place pixel grid.  Coordinates that must satisfy exact
// arithmetic relations in the emitted document (seams, partitions) are
// snapped first, because formatting-as-truncation is not additive.
Rational grid3(const Rational& r) {
    Integer q = (r.numerator() * pow10(3)) / r.denominator();
    return Rational(q, pow10(3));
}

// unit * (12-place truncation of v): exact, deterministic pixel coordinate.
Rational scaled(const Value& v, int unit) {
    return eval_decimal(v, 12).truncated * Rational(unit);
}

std::string annot(const Value& v) { return eval_decimal(v, 8).digits; }

// 3-place label, taken as a prefix of the 12-place geometry truncation.
std::string label3(const std::string& digits) {
    return digits.substr(0, digits.find('.') + 4);
}

void check_style(const RenderStyle& style) {
    if (style.unit_px < 10) throw std::invalid_argument("unit_px must be >= 10");
    if (style.stroke_px.sign() <= 0) throw std::invalid_argument("stroke_px must be positive");
}

class SvgDoc {
public:
    explicit SvgDoc(const RenderStyle& style)
        : style_(style),
          base_(stroke_str(style.stroke_px)),
          guide_(stroke_str(style.stroke_px * Rational(4, 5))),
          accent_(stroke_str(style.stroke_px * Rational(5, 3))) {}

    void rect(const Rational& x, const Rational& y, const Rational& w, const Rational& h,
              const std::string& fill, const char* stroke, bool dashed = false) {
        body_ << "  <rect x=\"" << px(x) << "\" y=\"" << px(y) << "\" width=\"" << px(w)
              << "\" height=\"" << px(h) << "\" fill=\"" << fill << "\" stroke=\"" << stroke
              << "\" stroke-width=\"" << base_ << "\"";
        if (dashed) body_ << " stroke-dasharray=\"" << style_.dash_pattern << "\"";
        body_ << "/>\n";
    }
    void line(const Rational& x1, const Rational& y1, const Rational& x2, const Rational& y2,
              const char* stroke, bool dashed) {
        body_ << "  <line x1=\"" << px(x1) << "\" y1=\"" << px(y1) << "\" x2=\"" << px(x2)
              << "\" y2=\"" << px(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\""
              << guide_ << "\"";
        if (dashed) body_ << " stroke-dasharray=\"" << style_.dash_pattern << "\"";
        body_ << "/>\n";
    }
    void arc(const Rational& from_x, const Rational& from_y, const Rational& radius,
             const Rational& to_x, const Rational& to_y) {
        body_ << "  <path d=\"M " << px(from_x) << " " << px(from_y) << " A " << px(radius) << " "
              << px(radius) << " 0 0 1 " << px(to_x) << " " << px(to_y)
              << "\" fill=\"none\" stroke=\"" << kGuide << "\" stroke-width=\"" << guide_
              << "\" stroke-dasharray=\"" << style_.dash_pattern << "\"/>\n";
    }
    void result_segment(const Rational& x1, const Rational& x2, const Rational& y) {
        body_ << "  <path d=\"M " << px(x1) << " " << px(y) << " L " << px(x2) << " " << px(y)
              << "\" fill=\"none\" stroke=\"" << kAccent << "\" stroke-width=\"" << accent_
              << "\"/>\n";
    }
    void dot(const Rational& x, const Rational& y) {
        body_ << "  <circle cx=\"" << px(x) << "\" cy=\"" << px(y) << "\" r=\"2\" fill=\"" << kInk
              << "\"/>\n";
    }
    void text(const Rational& x, const Rational& y, const std::string& s, const char* anchor,
              int size = 12) {
        body_ << "  <text x=\"" << px(x) << "\" y=\"" << px(y)
              << "\" font-family=\"monospace\" font-size=\"" << size << "\" text-anchor=\""
              << anchor << "\" fill=\"" << kInk << "\">" << s << "</text>\n";
    }
    std::string finish(const Rational& width, const Rational& height) const {
        std::ostringstream out;
        out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
            << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << px(width) << "\" height=\""
            << px(height) << "\" viewBox=\"0 0 " << px(width) << " " << px(height) << "\">\n"
            << body_.str() << "</svg>\n";
        return out.str();
    }

private:
    const RenderStyle& style_;
    std::string base_, guide_, accent_;
    std::ostringstream body_;
};

}  // namespace

std::string render_subdivision_svg(const Value& x, const RenderStyle& style) {
    check_style(style);
    Subdivision s = subdivide(x);
    const int u = style.unit_px;
    const Rational left(20), top(24);
    Rational w_whole = grid3(scaled(s.whole_length, u));
    Rational w_kept = grid3(scaled(s.kept_length, u));
    Rational w_strip = w_whole - w_kept;  // partition exact on the pixel grid
    Rational height(u), bottom = top + height;

    SvgDoc doc(style);
    doc.rect(left, top, w_whole, height, "none", kInk);
    doc.rect(left, top, w_kept, height, style.grey_fill, kInk);
    doc.rect(left + w_kept, top, w_strip, height, "none", kInk, true);
    doc.line(left, bottom, left + w_whole, top, kGuide, false);            // diagonal
    doc.line(left + w_whole, bottom, left + w_kept, top, kAccent, false);  // perpendicular
    doc.text(left + w_whole / Rational(2), top - Rational(10), "x = " + annot(s.whole_length),
             "middle");
    doc.text(left + w_kept / Rational(2), bottom + Rational(18),
             "kept = " + annot(s.kept_length), "middle");
    doc.text(left + w_kept + w_strip / Rational(2), bottom + Rational(36),
             "strip = " + annot(s.strip_width), "middle");
    return doc.finish(w_whole + Rational(40), bottom + Rational(48));
}

std::string render_extend_svg(int count, const RenderStyle& style) {
    check_style(style);
    if (count < 2) throw std::invalid_argument("extension figure needs count >= 2");
    std::vector<ExtendStep> chain = extend_sequence(count, 12);
    const int u = style.unit_px;
    const Rational left(20), top(30);
    Rational height(u), bottom = top + height;
    Rational widest(0);

    SvgDoc doc(style);
    auto w_of = [&](const ExtendStep& s) { return s.approx.truncated * Rational(u); };
    for (const ExtendStep& step : chain) widest = std::max(widest, w_of(step));
    // nested rectangles sharing the unit side and the top-left corner
    for (const ExtendStep& step : chain) doc.rect(left, top, w_of(step), height, "none", kInk);
    for (size_t k = 0; k < chain.size(); ++k) {
        Rational w = w_of(chain[k]);
        Rational row = bottom + Rational(8 + 14 * static_cast<int>(k));
        doc.line(left + w, bottom, left + w, row + Rational(4), kGuide, true);
        doc.text(left + w, row + Rational(14),
                 "x" + std::to_string(k) + " = " + label3(chain[k].approx.digits), "middle");
    }
    Rational rows(14 * static_cast<int>(chain.size()));
    return doc.finish(left + widest + Rational(20), bottom + rows + Rational(28));
}

std::string render_fold_svg(const FoldTrace& trace, const RenderStyle& style) {
    check_style(style);
    if (trace.steps.empty()) throw std::invalid_argument("fold figure needs a non-empty trace");
    const int u = style.unit_px;
    const Rational strip_h(16), row_h(44), left(80);
    Rational max_len(0);
    for (const FoldStep& s : trace.steps)
        max_len = std::max({max_len, s.before, s.after});

    SvgDoc doc(style);
    Rational y(24);
    for (const FoldStep& s : trace.steps) {
        Rational wb = s.before * Rational(u);
        Rational wa = s.after * Rational(u);
        doc.rect(left, y, wb, strip_h, style.grey_fill, kInk);
        if (!(s.before == s.after)) {
            doc.rect(left, y, wa, strip_h, "none", kInk);
            // crease at the fold/glue boundary
            Rational cx = left + std::min(wb, wa);
            doc.line(cx, y - Rational(4), cx, y + strip_h + Rational(4), kGuide, true);
        }
        doc.text(Rational(8), y + Rational(12), s.op, "start");
        doc.text(left + std::max(wb, wa) + Rational(8), y + Rational(12), s.after.to_string(),
                 "start");
        y += row_h;
    }
    return doc.finish(left + max_len * Rational(u) + Rational(90), y + Rational(4));
}

ConstructionData construction_data(ConstructionTarget target) {
    Value zero{Rational(0)}, one{Rational(1)};
    Value phi_v{phi()};
    ConstructionData d;
    if (target == ConstructionTarget::phi) {
        // Unit square; the arc about the bottom-edge midpoint O through the
        // far top corner A has radius sqrt(5)/2 and meets the base at P,
        // with |base..P| = 1/2 + sqrt(5)/2 = phi.
        Value half{Rational(1, 2)};
        d.points = {{"O", half, zero}, {"A", one, one}, {"P", phi_v, zero}};
        d.arc_center_x = half;
        d.arc_center_y = zero;
        d.arc_radius = value_sub(phi_v, half);  // sqrt(5)/2
        d.result_from_x = zero;
        d.result_to_x = phi_v;
        d.result_y = zero;
        d.result_length = phi_v;
        d.label = "phi";
        return d;
    }
    // chi: inside the phi rectangle the top-edge segment from B = (1,1) to
    // (phi,1) has length 1/phi.  M is its midpoint, F sits below M on the
    // base, so |BF|^2 = (1/(2 phi))^2 + 1 = (6 - phi)/4.  Swinging F about B
    // onto the top edge line lands at G, and
    // |GM| = (phi - 1)/2 + sqrt(6 - phi)/2 = chi.
    Value mid = value_div(value_add(one, phi_v), Value(Rational(2)));
    Value bf = demote(Value(TowerElem({Rational(0), Rational(0)}, {Rational(0), Rational(1, 2)},
                                      {Rational(-1), Rational(6)})));
    Value g_x = value_sub(one, bf);  // sits slightly left of the rectangle
    d.points = {{"B", one, one}, {"M", mid, one}, {"F", mid, zero}, {"G", g_x, one}};
    d.arc_center_x = one;
    d.arc_center_y = one;
    d.arc_radius = bf;
    d.result_from_x = g_x;
    d.result_to_x = mid;
    d.result_y = one;
    d.result_length = value_sub(mid, g_x);
    d.label = "chi";
    return d;
}

std::string render_construction_svg(ConstructionTarget target, const RenderStyle& style) {
    check_style(style);
    ConstructionData data = construction_data(target);
    const int u = style.unit_px;
    const Rational m(30), top(30);
    Rational bottom = top + Rational(u);
    auto X = [&](const Value& v) { return m + scaled(v, u); };
    auto Y = [&](const Value& v) { return bottom - scaled(v, u); };
    Rational x_one = X(Value(Rational(1)));
    Rational x_phi = X(Value(phi()));

    SvgDoc doc(style);
    if (target == ConstructionTarget::phi) {
        doc.rect(m, top, Rational(u), Rational(u), "none", kInk);      // unit square
        doc.rect(m, top, x_phi - m, Rational(u), "none", kGuide);      // phi rectangle
        doc.line(X(data.points[0].x), Y(data.points[0].y), X(data.points[1].x),
                 Y(data.points[1].y), kGuide, true);  // O to A
    } else {
        doc.rect(m, top, x_phi - m, Rational(u), "none", kInk);  // phi rectangle
        doc.line(x_one, top, x_one, bottom, kGuide, true);       // unit-square divider
        doc.line(X(data.points[1].x), Y(data.points[1].y), X(data.points[2].x),
                 Y(data.points[2].y), kGuide, true);  // M down to F
        doc.line(X(data.points[0].x), Y(data.points[0].y), X(data.points[2].x),
                 Y(data.points[2].y), kGuide, true);  // B to F
    }
    // the swing: from the last auxiliary point onto the result line
    const ConstructionPoint& from = data.points[target == ConstructionTarget::phi ? 1 : 2];
    const ConstructionPoint& to = data.points.back();
    doc.arc(X(from.x), Y(from.y), scaled(data.arc_radius, u), X(to.x), Y(to.y));
    doc.result_segment(X(data.result_from_x), X(data.result_to_x), Y(data.result_y));
    for (const ConstructionPoint& p : data.points) {
        doc.dot(X(p.x), Y(p.y));
        doc.text(X(p.x) + Rational(5), Y(p.y) - Rational(5), p.label, "start", 10);
    }
    Rational label_y = target == ConstructionTarget::phi ? bottom + Rational(20)
                                                         : top - Rational(14);
    doc.text((X(data.result_from_x) + X(data.result_to_x)) / Rational(2), label_y,
             data.label + " = " + annot(data.result_length), "middle");
    return doc.finish(x_phi + m, bottom + Rational(36));
}

}  // namespace chilab
