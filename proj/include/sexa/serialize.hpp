#pragma once

// Canonical JSON forms.
//
//   numeral   {"sexagesimal": "1,12;15", "rational": "289/4"}
//   quantity  {"value": numeral, "unit": "nindan3"}
//   breakdown {"gur7": numeral, "gur": numeral, "sila": numeral}
//   solid     {"kind": "frustum", "a": "10", "b": "7", "h": "18 kus"}
//   trace     {"script", "steps": [{"idx", "opcode", "target", "computed",
//              "claim", "corrected", "verdict", "source_line"}], "summary"}
//
// Readers take the "rational" member as authoritative. Solid parameters are
// numeral strings, optionally followed by a length unit; plain numerals
// are nindan.

#include "sexa/metrology.hpp"
#include "sexa/sexagesimal.hpp"
#include "sexa/solid.hpp"
#include "sexa/tablet_vm.hpp"

#include <json.hpp>

#include <string>

namespace sexa {

using Json = nlohmann::json;

inline Json numeral_json(const SexRational& q) {
  return {{"sexagesimal", format_sex(q)}, {"rational", q.to_string()}};
}

inline SexRational numeral_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    return s.find('/') != std::string::npos ? SexRational::from_string(s) : parse_sex(s);
  }
  return SexRational::from_string(j.at("rational").get<std::string>());
}

inline Json to_json(const Quantity& q) {
  return {{"value", numeral_json(q.value)}, {"unit", std::string(q.unit.name())}};
}

inline Quantity quantity_from_json(const Json& j) {
  return {numeral_from_json(j.at("value")), Unit::parse(j.at("unit").get<std::string>())};
}

inline Json to_json(const CapacityBreakdown& b) {
  return {{"gur7", numeral_json(SexRational(b.gur7))},
          {"gur", numeral_json(SexRational(b.gur))},
          {"sila", numeral_json(b.sila)},
          {"text", format_breakdown(b)}};
}

inline CapacityBreakdown breakdown_from_json(const Json& j) {
  CapacityBreakdown b;
  const SexRational g7 = numeral_from_json(j.at("gur7"));
  const SexRational g = numeral_from_json(j.at("gur"));
  if (!g7.is_integer() || !g.is_integer()) throw std::invalid_argument("gur counts must be integers");
  b.gur7 = g7.numerator();
  b.gur = g.numerator();
  b.sila = numeral_from_json(j.at("sila"));
  return b;
}

// ---------------------------------------------------------------------------
// Solids

namespace detail {

/// Exact numeral text: sexagesimal when finite, "p/q" otherwise.
inline std::string param_text(const SexRational& q) {
  return is_finite_sexagesimal(q) ? format_sex(q) : q.to_string();
}

inline SexRational param_value(const std::string& text) {
  if (text.find('/') != std::string::npos) return SexRational::from_string(text);
  return text.find(' ') == std::string::npos ? parse_sex(text) : parse_quantity(text).value;
}

inline SexRational length_param(const Json& j, const char* key) {
  const auto text = j.at(key).get<std::string>();
  if (text.find('/') != std::string::npos) return SexRational::from_string(text);
  return convert(parse_quantity(text, Unit::nindan()), Unit::nindan()).value;
}

inline SexRational plain_param(const Json& j, const char* key) {
  return param_value(j.at(key).get<std::string>());
}

}  // namespace detail

inline Json to_json(const Solid& solid) {
  using detail::param_text;
  struct Visitor {
    Json operator()(const Cuboid& c) const {
      return {{"kind", "cuboid"}, {"a", param_text(c.a)}, {"b", param_text(c.b)}, {"c", param_text(c.c)}};
    }
    Json operator()(const PrismSpec& p) const {
      return {{"kind", "prism"}, {"base_area", param_text(p.base_area)}, {"h", param_text(p.h)}};
    }
    Json operator()(const PyramidSpec& p) const {
      return {{"kind", "pyramid"}, {"base_area", param_text(p.base_area)}, {"h", param_text(p.h)}};
    }
    Json operator()(const SquareFrustum& f) const {
      return {{"kind", "frustum"}, {"a", param_text(f.a)}, {"b", param_text(f.b)}, {"h", param_text(f.h)}};
    }
    Json operator()(const NgonFrustum& f) const {
      return {{"kind", "frustum"}, {"n", f.n},           {"a", param_text(f.a)},
              {"b", param_text(f.b)}, {"h", param_text(f.h)}};
    }
    Json operator()(const TruncatedTriangularPrism& t) const {
      return {{"kind", "truncated-prism"}, {"x", param_text(t.x)},  {"x1", param_text(t.x1)},
              {"x2", param_text(t.x2)},    {"y", param_text(t.y)},  {"h", param_text(t.h)}};
    }
    Json operator()(const GrainHeap& g) const {
      return {{"kind", "grainheap"}, {"x", param_text(g.x)}, {"h", param_text(g.h)},
              {"slope", param_text(g.slope)}};
    }
    Json operator()(const RotationSolid& r) const {
      Json j{{"kind", std::string(to_string(r.kind))}, {"r", param_text(r.r)}};
      if (r.kind != RotationSolid::Kind::sphere) j["h"] = param_text(r.h);
      return j;
    }
  };
  return std::visit(Visitor{}, solid);
}

inline Solid solid_from_json(const Json& j) {
  using detail::length_param;
  using detail::plain_param;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "cuboid") {
    return Cuboid{length_param(j, "a"), length_param(j, "b"), length_param(j, "c")};
  }
  if (kind == "prism") return PrismSpec{plain_param(j, "base_area"), length_param(j, "h")};
  if (kind == "pyramid") return PyramidSpec{plain_param(j, "base_area"), length_param(j, "h")};
  if (kind == "frustum") {
    const SexRational a = length_param(j, "a"), b = length_param(j, "b"), h = length_param(j, "h");
    if (j.contains("n")) return NgonFrustum{j.at("n").get<int>(), a, b, h};
    return SquareFrustum{a, b, h};
  }
  if (kind == "truncated-prism") {
    return TruncatedTriangularPrism{length_param(j, "x"), length_param(j, "x1"),
                                    length_param(j, "x2"), length_param(j, "y"),
                                    length_param(j, "h")};
  }
  if (kind == "grainheap") {
    GrainHeap g{length_param(j, "x"), length_param(j, "h")};
    if (j.contains("slope")) g.slope = plain_param(j, "slope");
    return g;
  }
  for (const auto k : {RotationSolid::Kind::sphere, RotationSolid::Kind::cylinder,
                       RotationSolid::Kind::cone}) {
    if (kind == to_string(k)) {
      RotationSolid r{k, length_param(j, "r")};
      if (k != RotationSolid::Kind::sphere) r.h = length_param(j, "h");
      return r;
    }
  }
  throw std::invalid_argument("unknown solid kind '" + kind + "'");
}

// ---------------------------------------------------------------------------
// Traces

namespace vm {

inline Json to_json(const Value& v) {
  Json j = numeral_json(v.number);
  j["unit"] = v.unit ? Json(std::string(v.unit->name())) : Json(nullptr);
  if (v.breakdown) j["breakdown"] = sexa::to_json(*v.breakdown);
  return j;
}

inline Json to_json(const Trace& t) {
  Json steps = Json::array();
  for (const auto& r : t.results) {
    const Step& step = t.script.steps[r.index];
    Json operands = Json::array();
    for (const auto& o : step.operands) operands.push_back(format_operand(o));
    steps.push_back({
        {"idx", r.index},
        {"target", step.target},
        {"opcode", std::string(to_string(step.opcode))},
        {"operands", operands},
        {"computed", to_json(r.computed)},
        {"claim", step.tablet_claim ? numeral_json(*step.tablet_claim) : Json(nullptr)},
        {"corrected", step.corrected ? numeral_json(*step.corrected) : Json(nullptr)},
        {"verdict", std::string(to_string(r.verdict))},
        {"source_line", step.source_line},
    });
  }
  Json outputs = Json::object();
  for (const auto& o : t.script.outputs) outputs[o.reg] = to_json(as_displayed(t.value_of(o.reg), o.unit));
  return {
      {"script", t.script.name},
      {"source", t.script.source},
      {"steps", steps},
      {"outputs", outputs},
      {"summary",
       {{"ok", t.summary.ok},
        {"annotated_error", t.summary.annotated_error},
        {"mismatch", t.summary.mismatch},
        {"unclaimed", t.summary.unclaimed},
        {"status", std::string(to_string(status_of(t)))}}},
  };
}

inline Json to_json(const Report& r, const Trace& t) {
  Json j = to_json(t);
  j["report"] = {{"status", std::string(to_string(r.status))},
                 {"flagged", r.flagged},
                 {"summary_line", r.summary_line}};
  return j;
}

}  // namespace vm

}  // namespace sexa
