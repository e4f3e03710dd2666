#include "contact_sextic/families.hpp"

#include "contact_sextic/algebra.hpp"
#include "contact_sextic/error.hpp"

namespace contact_sextic {

namespace {

RationalFunction rf(const char* text) { return RationalFunction::parse(text); }

MultiPoly var(const char* name) { return MultiPoly::variable(name); }

// p(r) for p univariate in x (or constant).
RationalFunction compose(const MultiPoly& p, const RationalFunction& r) {
    RationalFunction acc;
    const auto coeffs = p.coefficients_in("x");
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (!it->is_constant())
            throw Error(ErrorCode::InvalidArgument, "expected a polynomial in x alone: " + p.to_string());
        acc = acc * r + RationalFunction(it->is_zero() ? Rational(0) : it->constant_value());
    }
    return acc;
}

void require_in_x(const MultiPoly& p, const char* what) {
    for (const auto& v : p.variables())
        if (v != "x") throw Error(ErrorCode::InvalidArgument, std::string(what) + " must be a polynomial in x");
}

}  // namespace

ParametricCurve seed_curve() { return {rf("1/(t^2 + 1)"), rf("-t^3/(t^2 + 1)^2")}; }

ImplicitCurve seed_implicit() { return ImplicitCurve(MultiPoly::parse("y^2 + x*(x - 1)^3")); }

CurvePair canonical_curve() {
    return {ImplicitCurve(MultiPoly::parse("y^3 + 3*(3*x^4 - 6*x^2 - 1)*y + 12*x*(3*x^4 + 1)")),
            ParametricCurve(rf("t*(t^2 - 3)/(3*(t^2 + 1))"), rf("-4*t*(t^4 + 3)/(3*(t^2 + 1)^2)"))};
}

GeneralSolutionParams GeneralSolutionParams::from_array(const std::array<Rational, 7>& c) {
    return {c[0], c[1], c[2], c[3], c[4], c[5], c[6]};
}

std::array<Rational, 7> GeneralSolutionParams::to_array() const { return {c1, c2, c3, c4, c5, c6, c7}; }

MultiPoly general_solution_polynomial(const GeneralSolutionParams& p) {
    const MultiPoly x = var("x");
    const MultiPoly Y = var("y").scaled(p.c4) + MultiPoly(p.c1) + x.scaled(p.c2) + x.pow(2).scaled(p.c3);
    const MultiPoly S = x.scaled(p.c5) + MultiPoly(p.c6);
    const MultiPoly W = MultiPoly(1) - x.scaled(p.c7);
    const MultiPoly S2 = S.pow(2), W2 = W.pow(2);
    const MultiPoly S4 = S2.pow(2), W4 = W2.pow(2);
    return Y.pow(3) + (S4.scaled(3) - (S2 * W2).scaled(6) - W4).scaled(3) * Y +
           (S * (S4 * W).scaled(3) + S * W4 * W).scaled(12);
}

PointTransformationParams general_solution_map(const GeneralSolutionParams& p) {
    if (p.c4 == 0) throw Error(ErrorCode::DegenerateMap, "c4 = 0");
    const Rational det = p.c5 + p.c6 * p.c7;
    if (det == 0) throw Error(ErrorCode::DegenerateMap, "c5 + c6 c7 = 0");
    // Inverse of (x, y) -> ((c5 x + c6)/W, (c4 y + c1 + c2 x + c3 x^2)/W^2).
    const Rational lambda = 1 / det;
    PointTransformationParams q;
    q.c1 = -p.c1 / p.c4;
    q.c2 = -p.c2 / p.c4;
    q.c3 = -p.c3 / p.c4;
    q.c4 = 1 / p.c4;
    q.c5 = lambda;
    q.c6 = -lambda * p.c6;
    q.c7 = p.c7;
    return q;
}

CurvePair general_solution(const GeneralSolutionParams& p) {
    const PointTransformationParams q = general_solution_map(p);
    return {ImplicitCurve(general_solution_polynomial(p)),
            apply_point_transformation(canonical_curve().parametric, q)};
}

ParametricCurve contact_family_base(const ContactFamilyParams& p) {
    if (p.b5 == p.b0 * p.b6) throw Error(ErrorCode::DegenerateDenominator, "b5 - b0 b6 = 0 makes x(t) constant");
    const UniPoly den(std::vector<Rational>{p.b0, 0, 1});
    const UniPoly xn(std::vector<Rational>{p.b5, 0, p.b6});
    const UniPoly yn(std::vector<Rational>{p.b1, p.b2, p.b3, 0, p.b4});
    return {RationalFunction(xn, den), RationalFunction(yn, den.pow(2))};
}

namespace {

RationalFunction slope_with(const ContactFamilyParams& p, const Rational& factor) {
    if (factor == 0) throw Error(ErrorCode::DegenerateDenominator, "b5 - b0 b6 = 0");
    const UniPoly num(std::vector<Rational>{p.b2 * p.b0, 2 * p.b3 * p.b0 - 4 * p.b1, -3 * p.b2,
                                            4 * p.b4 * p.b0 - 2 * p.b3});
    const UniPoly den = UniPoly(std::vector<Rational>{0, p.b0, 0, 1}) * Rational(2 * factor);
    return RationalFunction(num, den);
}

}  // namespace

RationalFunction contact_family_slope(const ContactFamilyParams& p) { return slope_with(p, p.b0 * p.b6 - p.b5); }

RationalFunction contact_family_slope_opposite(const ContactFamilyParams& p) {
    return slope_with(p, p.b5 - p.b0 * p.b6);
}

ContactCurve contact_family(const ContactFamilyParams& p) {
    const ParametricCurve base = contact_family_base(p);
    const RationalFunction z = contact_family_slope(p);
    const RationalFunction b(p.b);
    return {ParametricCurve(base.x() - RationalFunction(2) * b * z, base.y() - b * z.pow(2)), z};
}

QuarticRoots admissible_quartic_roots(const MultiPoly& P) {
    require_in_x(P, "P");
    const auto fail = [&] {
        return Error(ErrorCode::InadmissibleQuartic, "P needs one simple and one triple root: " + P.to_string());
    };
    if (P.degree("x") != 4) throw fail();
    const SquareFreeDecomposition d = square_free_decomposition(P);
    if (d.parts.size() != 2 || d.parts[0].multiplicity != 1 || d.parts[1].multiplicity != 3) throw fail();
    if (d.parts[0].factor.degree("x") != 1 || d.parts[1].factor.degree("x") != 1) throw fail();
    // Monic linear factors x - r.
    return {d.content, -d.parts[1].factor.coefficient("x", 0).constant_value(),
            -d.parts[0].factor.coefficient("x", 0).constant_value()};
}

ImplicitCurve degree_four_family(const MultiPoly& Q, const MultiPoly& P) {
    require_in_x(Q, "Q");
    if (Q.degree("x") > 2) throw Error(ErrorCode::InvalidArgument, "Q must be at most quadratic");
    admissible_quartic_roots(P);
    return ImplicitCurve((var("y") + Q).pow(2) + P);
}

ParametricCurve degree_four_parametrization(const MultiPoly& Q, const MultiPoly& P) {
    degree_four_family(Q, P);
    const QuarticRoots r = admissible_quartic_roots(P);
    const RationalFunction m = RationalFunction::t();
    const RationalFunction k(r.k);
    const RationalFunction s = k / (m.pow(2) + k);
    const RationalFunction span(r.triple - r.simple);
    const RationalFunction x = RationalFunction(r.simple) + span * s;
    const RationalFunction w = (s - RationalFunction(1)) * m * s;
    return {x, span.pow(2) * w - compose(Q, x)};
}

namespace {

UVPair make_uv(const MultiPoly& Q, const MultiPoly& P, const MultiPoly& b) {
    require_in_x(Q, "Q");
    admissible_quartic_roots(P);
    const MultiPoly z = var("z");
    const MultiPoly X = var("x") + b.scaled(2) * z;
    const auto at_X = [&](const MultiPoly& f) { return f.substitute("x", X); };
    const MultiPoly PX = at_X(P);
    const MultiPoly dPX = at_X(P.derivative("x"));
    const MultiPoly u = (var("y") + b * z.pow(2) + at_X(Q)).pow(2) + PX;
    const MultiPoly v = (PX * (z + at_X(Q.derivative("x"))).pow(2)).scaled(4) + dPX.pow(2);
    return {u, v};
}

const MultiPoly& seed_quartic() {
    static const MultiPoly p = MultiPoly::parse("x*(x - 1)^3");
    return p;
}

}  // namespace

UVPair uv_pair(const MultiPoly& Q, const MultiPoly& P, const Rational& b) { return make_uv(Q, P, MultiPoly(b)); }

UVPair uv_pair_symbolic(const MultiPoly& Q, const MultiPoly& P) { return make_uv(Q, P, var("b")); }

const MultiPoly& new_curve_polynomial() {
    static const MultiPoly f = MultiPoly::parse(
        "(64*b + 1024*b^3)*y^3"
        " + ((768*b^2 + 16)*x^2 - 768*x*b^2 + 288*b^2)*y^2"
        " + (264*x^2*b - 108*b^3 + 192*x^4*b - 72*x*b - 384*x^3*b)*y"
        " + (48*x^4 - 27*b^2 + 54*x*b^2 - 16*x^3 - 27*x^2*b^2 - 48*x^5 + 16*x^6)");
    return f;
}

ImplicitCurve new_curve(const Rational& b) {
    if (64 * b + 1024 * b * b * b == 0) throw Error(ErrorCode::DegenerateLeading, "64 b + 1024 b^3 = 0");
    return ImplicitCurve(new_curve_polynomial().evaluate("b", b));
}

ContactFamilyParams seed_contact_params(const Rational& b) {
    ContactFamilyParams p;
    p.b = b;
    p.b0 = 1;
    p.b2 = -1;
    p.b6 = 1;
    return p;
}

namespace {

EliminationSplit split(const MultiPoly& resultant_poly, const MultiPoly& candidate, const Rational& probe,
                       bool symbolic) {
    MultiPoly cofactor;
    if (!resultant_poly.divides_into(candidate, &cofactor))
        throw Error(ErrorCode::BranchSelectionFailure, "the degree-six candidate does not divide the resultant");
    const ContactCurve c = contact_family(seed_contact_params(probe));
    const Bindings along{{"x", c.curve.x()}, {"y", c.curve.y()}};
    const auto vanishes = [&](const MultiPoly& f) {
        return substitute_rational(symbolic ? f.evaluate("b", probe) : f, along).is_zero();
    };
    const bool first = vanishes(candidate);
    const bool second = vanishes(cofactor);
    if (first == second) throw Error(ErrorCode::BranchSelectionFailure, "z = y' does not single out one factor");
    return first ? EliminationSplit{resultant_poly, candidate, cofactor}
                 : EliminationSplit{resultant_poly, cofactor, candidate};
}

}  // namespace

EliminationSplit split_elimination(const Rational& b) {
    if (b == 0) throw Error(ErrorCode::DegenerateLeading, "b = 0 removes z from u");
    const UVPair uv = uv_pair(MultiPoly(0), seed_quartic(), b);
    return split(resultant(uv.u, uv.v, "z"), new_curve_polynomial().evaluate("b", b), b, false);
}

EliminationSplit split_elimination_symbolic(const Rational& probe) {
    if (probe == 0) throw Error(ErrorCode::InvalidArgument, "probe must be nonzero");
    const UVPair uv = uv_pair_symbolic(MultiPoly(0), seed_quartic());
    return split(resultant(uv.u, uv.v, "z"), new_curve_polynomial(), probe, true);
}

ConicFamily conic_family(const std::array<Rational, 5>& c, const std::optional<std::pair<Rational, Rational>>& point) {
    const auto& [c1, c2, c3, c4, c5] = c;
    // A x^2 + B xy + C y^2 + D x + E y + F for y^2 - (c1 x^2 + c2 xy + c3 y + c4 x + c5).
    const Rational A = -c1, B = -c2, Cc = 1, D = -c4, E = -c3, F = -c5;
    const Rational det = A * (Cc * F - E * E / 4) - B / 2 * (B / 2 * F - E / 2 * D / 2) +
                         D / 2 * (B / 2 * E / 2 - Cc * D / 2);
    if (det == 0) throw Error(ErrorCode::DegenerateConic, "conic is degenerate");
    const MultiPoly x = var("x"), y = var("y");
    const MultiPoly g = y.pow(2) - x.pow(2).scaled(c1) - (x * y).scaled(c2) - y.scaled(c3) - x.scaled(c4) -
                        MultiPoly(c5);
    ConicFamily out{ImplicitCurve(g), std::nullopt};
    if (!point) return out;
    const auto& [x0, y0] = *point;
    const std::map<std::string, Rational> at{{"x", x0}, {"y", y0}};
    if (!g.evaluate(at).is_zero()) throw Error(ErrorCode::NotOnCurve, "point is not on the conic");
    const MultiPoly gx = g.derivative("x").evaluate(at);
    const MultiPoly gy = g.derivative("y").evaluate(at);
    const Rational ax = gx.is_zero() ? Rational(0) : gx.constant_value();
    const Rational ay = gy.is_zero() ? Rational(0) : gy.constant_value();
    if (ax == 0 && ay == 0) throw Error(ErrorCode::DegenerateConic, "point is singular on the conic");
    // Second intersection of the line through the point with slope m.
    const RationalFunction m = RationalFunction::t();
    const RationalFunction L = RationalFunction(ax) + RationalFunction(ay) * m;
    const RationalFunction q = m.pow(2) - RationalFunction(c2) * m - RationalFunction(c1);
    const RationalFunction s = L / q;
    out.parametric = ParametricCurve(RationalFunction(x0) - s, RationalFunction(y0) - m * s);
    return out;
}

}  // namespace contact_sextic
