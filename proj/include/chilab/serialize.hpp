#pragma once

#include <string>

#include <json.hpp>

#include "chilab/constants.hpp"
#include "chilab/fold.hpp"
#include "chilab/rect.hpp"
#include "chilab/sequences.hpp"
#include "chilab/value.hpp"

namespace chilab {

// Key order is part of the format: serialize -> parse -> serialize is
// byte-identical.
using Json = nlohmann::ordered_json;

// {"kind":"rational","value":"5/6"}
// {"kind":"golden","a":"1","b":"0"}
// {"kind":"tower","p":{"a":..,"b":..},"q":{...},"r":{...}}
Json value_to_json(const Value& v);
Value value_from_json(const Json& j);  // throws std::invalid_argument on malformed input

// Human-oriented exact form: "5/6", "phi+1", "1+sqrt(2)",
// "1/2*phi-1/2+sqrt(-1/4*phi+3/2)" (the sqrt argument absorbs q^2).
std::string pretty_value(const Value& v);

Json constant_to_json(const NamedConstant& c, int digits);

// One compact JSON object per line: {"op":"...","before":"p/q","after":"p/q"}.
std::string trace_to_jsonl(const FoldTrace& trace);
FoldTrace trace_from_jsonl(const std::string& text);

Json subdivision_to_json(const Subdivision& s, int digits);
Json cf_to_json(const std::vector<Value>& convergents, int digits);
Json h_terms_to_json(const std::vector<GoldenElem>& terms, int digits);
Json radical_to_json(const std::vector<RadicalStep>& steps);
Json extend_chain_to_json(const std::vector<ExtendStep>& steps);

}  // namespace chilab
