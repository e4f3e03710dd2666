#include "json_io.hpp"

#include <fstream>
#include <sstream>

#include "contact_sextic/error.hpp"

namespace contact_sextic::cli {

Rational rational_from_json(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    // floats are refused on purpose: 0.1 has no short exact value
    throw Error(ErrorCode::Parse, "expected an integer or a \"p/q\" string, got " + v.dump());
}

json to_json(const Rational& q) { return to_string(q); }

json curve_to_json(const CurveDoc& c) {
    json j = json::object();
    if (c.implicit) j["implicit"] = c.implicit->polynomial().to_string();
    if (c.parametric)
        j["parametric"] = {{"x", c.parametric->x().to_string()}, {"y", c.parametric->y().to_string()}};
    if (c.z) j["z"] = c.z->to_string();
    return j;
}

CurveDoc curve_from_json(const json& j) {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "curve document must be an object");
    CurveDoc c;
    if (j.contains("implicit")) c.implicit = ImplicitCurve(MultiPoly::parse(j.at("implicit").get<std::string>()));
    if (j.contains("parametric")) {
        const json& p = j.at("parametric");
        if (!p.contains("x") || !p.contains("y"))
            throw Error(ErrorCode::Parse, "parametric curve needs \"x\" and \"y\"");
        c.parametric = ParametricCurve(RationalFunction::parse(p.at("x").get<std::string>()),
                                       RationalFunction::parse(p.at("y").get<std::string>()));
    }
    if (j.contains("z")) c.z = RationalFunction::parse(j.at("z").get<std::string>());
    if (!c.implicit && !c.parametric) throw Error(ErrorCode::Parse, "curve has neither \"implicit\" nor \"parametric\"");
    return c;
}

json jet_to_json(const ExactJet& jet) {
    json j = jet_to_json(to_numeric(jet));
    json ys = json::array();
    for (const auto& q : jet.y) ys.push_back(to_string(q));
    j["exact"] = {{"x0", to_string(jet.x0)}, {"y", ys}};
    return j;
}

json jet_to_json(const NumericJet& jet) { return {{"x0", jet.x0}, {"y", jet.y}}; }

NumericJet jet_from_json(const json& j) {
    if (!j.is_object() || !j.contains("x0") || !j.contains("y") || !j.at("y").is_array())
        throw Error(ErrorCode::Parse, "jet needs \"x0\" and a \"y\" array");
    NumericJet jet;
    // prefer the exact record when present, it survives a round trip unchanged
    if (j.contains("exact")) {
        const json& e = j.at("exact");
        jet.x0 = to_double(rational_from_json(e.at("x0")));
        for (const auto& v : e.at("y")) jet.y.push_back(to_double(rational_from_json(v)));
        return jet;
    }
    jet.x0 = j.at("x0").get<double>();
    jet.y = j.at("y").get<std::vector<double>>();
    return jet;
}

json fit_to_json(const FitResult& r) {
    json j;
    for (int k = 0; k < 7; ++k) j["c" + std::to_string(k + 1)] = r.c[k];
    j["residuals"] = r.residuals;
    j["residual_norm"] = r.residual_norm;
    j["iterations"] = r.iterations;
    return j;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Parse, "cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
    if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
}

}  // namespace contact_sextic::cli
