#include "chilab/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace chilab {

namespace {
Json golden_fields(const GoldenElem& g) {
    return Json{{"a", g.a.to_string()}, {"b", g.b.to_string()}};
}

Rational parse_rational_or_throw(const Json& j, const char* what) {
    if (!j.is_string()) throw std::invalid_argument(std::string(what) + ": expected string");
    auto r = Rational::parse(j.get<std::string>());
    if (!r) throw std::invalid_argument(std::string(what) + ": bad rational '" +
                                        j.get<std::string>() + "'");
    return *r;
}

GoldenElem golden_from_fields(const Json& j, const char* what) {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        throw std::invalid_argument(std::string(what) + ": expected {a, b}");
    return {parse_rational_or_throw(j.at("a"), what), parse_rational_or_throw(j.at("b"), what)};
}
}  // namespace

Json value_to_json(const Value& v) {
    Value w = demote(v);
    if (const auto* r = std::get_if<Rational>(&w))
        return Json{{"kind", "rational"}, {"value", r->to_string()}};
    if (const auto* g = std::get_if<GoldenElem>(&w)) {
        Json j = Json{{"kind", "golden"}};
        j.update(golden_fields(*g));
        return j;
    }
    const auto& t = std::get<TowerElem>(w);
    return Json{{"kind", "tower"},
                {"p", golden_fields(t.p)},
                {"q", golden_fields(t.q)},
                {"r", golden_fields(t.r)}};
}

Value value_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw std::invalid_argument("value: expected object with kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return Value(parse_rational_or_throw(j.at("value"), "rational value"));
    if (kind == "golden") return demote(Value(golden_from_fields(j, "golden value")));
    if (kind == "tower") {
        TowerElem t(golden_from_fields(j.at("p"), "tower p"),
                    golden_from_fields(j.at("q"), "tower q"),
                    golden_from_fields(j.at("r"), "tower r"));
        return demote(Value(t));
    }
    throw std::invalid_argument("value: unknown kind '" + kind + "'");
}

std::string pretty_value(const Value& v) {
    Value w = demote(v);
    if (const auto* r = std::get_if<Rational>(&w)) return r->to_string();
    if (const auto* g = std::get_if<GoldenElem>(&w)) return g->to_string();
    const auto& t = std::get<TowerElem>(w);
    GoldenElem inner = t.q * t.q * t.r;  // |q| sqrt(r) = sqrt(q^2 r)
    std::string root = "sqrt(" + inner.to_string() + ")";
    std::string out;
    if (!t.p.is_zero()) out = t.p.to_string();
    if (sign(t.q) < 0) out += "-";
    else if (!out.empty()) out += "+";
    return out + root;
}

Json constant_to_json(const NamedConstant& c, int digits) {
    Json j;
    j["name"] = c.name;
    j["decimal"] = c.approximate ? c.decimal3 : eval_decimal(*c.exact, digits).digits;
    j["approximate"] = c.approximate;
    j["exact"] = c.exact ? value_to_json(*c.exact) : Json(nullptr);
    if (c.exact) j["pretty"] = pretty_value(*c.exact);
    if (c.defining_poly) j["defining_poly"] = poly_to_string(*c.defining_poly);
    j["description"] = c.description;
    return j;
}

std::string trace_to_jsonl(const FoldTrace& trace) {
    std::string out;
    for (const FoldStep& s : trace.steps) {
        Json j{{"op", s.op}, {"before", s.before.to_string()}, {"after", s.after.to_string()}};
        out += j.dump();
        out += '\n';
    }
    return out;
}

FoldTrace trace_from_jsonl(const std::string& text) {
    FoldTrace trace;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object())
            throw std::invalid_argument("trace: bad line '" + line + "'");
        trace.steps.push_back({j.at("op").get<std::string>(),
                               parse_rational_or_throw(j.at("before"), "trace before"),
                               parse_rational_or_throw(j.at("after"), "trace after")});
    }
    return trace;
}

namespace {
Json point_json(const std::array<Value, 2>& pt, int digits) {
    return Json::array({eval_decimal(pt[0], digits).digits, eval_decimal(pt[1], digits).digits});
}
}  // namespace

Json subdivision_to_json(const Subdivision& s, int digits) {
    Json j;
    // every piece shares the unit side: w is that side, l the piece's length
    const std::string unit = eval_decimal(Value(Rational(1)), digits).digits;
    j["whole"] = Json{{"w", unit}, {"l", eval_decimal(s.whole_length, digits).digits}};
    j["kept"] = Json{{"w", unit}, {"l", eval_decimal(s.kept_length, digits).digits}};
    j["strip"] = Json{{"w", unit}, {"l", eval_decimal(s.strip_width, digits).digits}};
    j["construction"] = Json{{"diagonal", Json::array({point_json(s.diag_a, digits),
                                                       point_json(s.diag_b, digits)})},
                             {"perpendicular", Json::array({point_json(s.perp_a, digits),
                                                            point_json(s.perp_b, digits)})},
                             {"foot", point_json(s.foot, digits)}};
    j["exact"] = Json{{"whole", value_to_json(s.whole_length)},
                      {"kept", value_to_json(s.kept_length)},
                      {"strip", value_to_json(s.strip_width)}};
    return j;
}

Json cf_to_json(const std::vector<Value>& convergents, int digits) {
    Json arr = Json::array();
    for (size_t k = 0; k < convergents.size(); ++k) {
        arr.push_back(Json{{"k", k + 1},
                           {"exact", value_to_json(convergents[k])},
                           {"pretty", pretty_value(convergents[k])},
                           {"decimal", eval_decimal(convergents[k], digits).digits}});
    }
    return arr;
}

Json h_terms_to_json(const std::vector<GoldenElem>& terms, int digits) {
    Json arr = Json::array();
    for (size_t k = 0; k < terms.size(); ++k) {
        arr.push_back(Json{{"k", k + 1},
                           {"exact", value_to_json(Value(terms[k]))},
                           {"pretty", terms[k].to_string()},
                           {"decimal", eval_decimal(Value(terms[k]), digits).digits}});
    }
    return arr;
}

Json radical_to_json(const std::vector<RadicalStep>& steps) {
    Json arr = Json::array();
    for (size_t k = 0; k < steps.size(); ++k) {
        arr.push_back(Json{{"k", k + 1},
                           {"decimal", steps[k].approx.digits},
                           {"lo", steps[k].bounds.lo.to_string()},
                           {"hi", steps[k].bounds.hi.to_string()}});
    }
    return arr;
}

Json extend_chain_to_json(const std::vector<ExtendStep>& steps) {
    Json arr = Json::array();
    for (size_t k = 0; k < steps.size(); ++k) {
        Json j{{"k", k}, {"decimal", steps[k].approx.digits}};
        j["exact"] = steps[k].exact ? value_to_json(*steps[k].exact) : Json(nullptr);
        if (steps[k].exact) j["pretty"] = pretty_value(*steps[k].exact);
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace chilab
