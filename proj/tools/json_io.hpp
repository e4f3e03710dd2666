#pragma once

#include <json.hpp>

#include <optional>
#include <string>

#include "contact_sextic/curves.hpp"
#include "contact_sextic/numeric.hpp"

namespace contact_sextic::cli {

using nlohmann::json;

// Frozen document shapes (see README, "File formats"):
//   rational     "p/q" string, or a JSON integer on input
//   polynomial   canonical text, e.g. "1*x^2*y^1 + -1/2"
//   curve        {"implicit": poly, "parametric": {"x": rf, "y": rf}, "z": rf}
//                any subset of the three keys; rf is infix text in t
//   jet          {"x0": num, "y": [y, y', ..., y^(n)], "exact": {"x0": q, "y": [q...]}}
//   fit          {"c1".."c7": num, "residuals": [7], "residual_norm": num, "iterations": n}

struct CurveDoc {
    std::optional<ImplicitCurve> implicit;
    std::optional<ParametricCurve> parametric;
    std::optional<RationalFunction> z;
};

Rational rational_from_json(const json& v);
json to_json(const Rational& q);

json curve_to_json(const CurveDoc& c);
CurveDoc curve_from_json(const json& j);

json jet_to_json(const ExactJet& jet);
json jet_to_json(const NumericJet& jet);
NumericJet jet_from_json(const json& j);

json fit_to_json(const FitResult& r);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace contact_sextic::cli
