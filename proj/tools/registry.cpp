#include "registry.hpp"

#include "contact_sextic/error.hpp"
#include "contact_sextic/families.hpp"

namespace contact_sextic::cli {

namespace {

Rational q(const json& p, const char* key) { return rational_from_json(p.at(key)); }

MultiPoly poly(const json& p, const char* key) { return MultiPoly::parse(p.at(key).get<std::string>()); }

std::vector<ParamSpec> rationals(std::initializer_list<std::pair<const char*, json>> names) {
    std::vector<ParamSpec> out;
    for (const auto& [n, d] : names) out.push_back({n, ParamKind::Rational, d, ""});
    return out;
}

CurveDoc from_pair(const CurvePair& c) { return {c.implicit, c.parametric, std::nullopt}; }

std::vector<FamilySpec> make_families() {
    std::vector<FamilySpec> f;
    f.push_back({"seed", "y^2 + x(x - 1)^3 = 0 with x = 1/(t^2 + 1), y = -t^3/(t^2 + 1)^2", {}, Check::Ode,
                 [](const json&) { return CurveDoc{seed_implicit(), seed_curve(), std::nullopt}; }});
    f.push_back({"canform", "real canonical sextic cubic in y", {}, Check::Ode,
                 [](const json&) { return from_pair(canonical_curve()); }});
    f.push_back({"general", "seven-parameter sextic, point transform of canform",
                 rationals({{"c1", 0}, {"c2", 0}, {"c3", 0}, {"c4", 1}, {"c5", 1}, {"c6", 0}, {"c7", 0}}),
                 Check::Ode, [](const json& p) {
                     GeneralSolutionParams g{q(p, "c1"), q(p, "c2"), q(p, "c3"), q(p, "c4"),
                                             q(p, "c5"), q(p, "c6"), q(p, "c7")};
                     return from_pair(general_solution(g));
                 }});
    f.push_back({"contact", "rational contact curves moved by the z^2 flow",
                 rationals({{"b", "1/2"}, {"b0", 1}, {"b1", 0}, {"b2", -1}, {"b3", 0},
                            {"b4", 0}, {"b5", 0}, {"b6", 1}}),
                 Check::Ode, [](const json& p) {
                     ContactFamilyParams c{q(p, "b"), q(p, "b0"), q(p, "b1"), q(p, "b2"),
                                           q(p, "b3"), q(p, "b4"), q(p, "b5"), q(p, "b6")};
                     const ContactCurve cc = contact_family(c);
                     return CurveDoc{std::nullopt, cc.curve, cc.z};
                 }});
    f.push_back({"degree_four", "(y + Q)^2 + P = 0, P with one simple and one triple root",
                 {{"Q", ParamKind::Polynomial, "0", "at most quadratic in x"},
                  {"P", ParamKind::Polynomial, "x*(x - 1)^3", "quartic in x"}},
                 Check::Ode, [](const json& p) {
                     const MultiPoly Q = poly(p, "Q"), P = poly(p, "P");
                     return CurveDoc{degree_four_family(Q, P), degree_four_parametrization(Q, P), std::nullopt};
                 }});
    f.push_back({"new_curve", "degree-six curve from eliminating z, Q = 0 and P = x(x - 1)^3",
                 rationals({{"b", "1/2"}}), Check::Ode, [](const json& p) {
                     const Rational b = q(p, "b");
                     const ContactCurve cc = contact_family(seed_contact_params(b));
                     return CurveDoc{new_curve(b), cc.curve, cc.z};
                 }});
    auto conic = rationals({{"c1", -1}, {"c2", 0}, {"c3", 0}, {"c4", 0}, {"c5", 1}});
    conic.push_back({"point", ParamKind::Point, json::array({1, 0}), "rational point [x, y] on the conic, or null"});
    f.push_back({"conic", "y^2 = c1 x^2 + c2 xy + c3 y + c4 x + c5", conic, Check::Halphen, [](const json& p) {
                     const std::array<Rational, 5> c{q(p, "c1"), q(p, "c2"), q(p, "c3"), q(p, "c4"), q(p, "c5")};
                     std::optional<std::pair<Rational, Rational>> pt;
                     if (!p.at("point").is_null())
                         pt = std::make_pair(rational_from_json(p.at("point").at(0)),
                                             rational_from_json(p.at("point").at(1)));
                     ConicFamily cf = conic_family(c, pt);
                     return CurveDoc{cf.implicit, cf.parametric, std::nullopt};
                 }});
    return f;
}

void check_value(const ParamSpec& s, const json& v) {
    switch (s.kind) {
        case ParamKind::Rational:
            rational_from_json(v);
            break;
        case ParamKind::Polynomial:
            if (!v.is_string()) throw Error(ErrorCode::Parse, s.name + " must be a polynomial string");
            MultiPoly::parse(v.get<std::string>());
            break;
        case ParamKind::Point:
            if (v.is_null()) break;
            if (!v.is_array() || v.size() != 2) throw Error(ErrorCode::Parse, s.name + " must be [x, y] or null");
            rational_from_json(v[0]);
            rational_from_json(v[1]);
            break;
    }
}

const char* kind_name(ParamKind k) {
    switch (k) {
        case ParamKind::Rational: return "rational";
        case ParamKind::Polynomial: return "polynomial";
        case ParamKind::Point: return "point";
    }
    return "";
}

}  // namespace

const std::vector<FamilySpec>& families() {
    static const std::vector<FamilySpec> f = make_families();
    return f;
}

const FamilySpec& find_family(const std::string& name) {
    for (const auto& f : families())
        if (f.name == name) return f;
    throw Error(ErrorCode::Parse, "unknown family '" + name + "' (try: family list)");
}

json normalise_params(const FamilySpec& f, const json& given) {
    if (!given.is_null() && !given.is_object()) throw Error(ErrorCode::Parse, "parameters must be a JSON object");
    json out = json::object();
    for (const auto& s : f.params) out[s.name] = s.fallback;
    if (given.is_object()) {
        for (const auto& [k, v] : given.items()) {
            const auto it = std::find_if(f.params.begin(), f.params.end(), [&](const ParamSpec& s) { return s.name == k; });
            if (it == f.params.end()) throw Error(ErrorCode::Parse, "family " + f.name + " has no parameter " + k);
            check_value(*it, v);
            out[k] = v;
        }
    }
    return out;
}

json describe(const FamilySpec& f) {
    json ps = json::array();
    for (const auto& s : f.params) {
        json e = {{"name", s.name}, {"type", kind_name(s.kind)}, {"default", s.fallback}};
        if (!s.doc.empty()) e["doc"] = s.doc;
        ps.push_back(e);
    }
    return {{"name", f.name},
            {"description", f.description},
            {"check", f.check == Check::Ode ? "seventh_order" : "halphen"},
            {"params", ps}};
}

}  // namespace contact_sextic::cli
