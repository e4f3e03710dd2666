#include <doctest.h>

#include <random>

#include "contact_sextic/algebra.hpp"
#include "contact_sextic/curves.hpp"
#include "contact_sextic/error.hpp"
#include "contact_sextic/families.hpp"
#include "contact_sextic/numeric.hpp"
#include "test_support.hpp"

using namespace contact_sextic;
using contact_sextic::testing::P;
using contact_sextic::testing::random_rational;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

MultiPoly incidence(const ImplicitCurve& f, const ParametricCurve& c) {
    return substitute_rational(f.polynomial(), {{"x", c.x()}, {"y", c.y()}});
}

GeneralSolutionParams random_params(std::mt19937& rng) {
    for (;;) {
        GeneralSolutionParams p;
        p.c1 = random_rational(rng);
        p.c2 = random_rational(rng);
        p.c3 = random_rational(rng);
        p.c4 = random_rational(rng, 9, true);
        p.c5 = random_rational(rng, 9, true);
        p.c6 = random_rational(rng);
        p.c7 = random_rational(rng);
        if (p.c5 + p.c6 * p.c7 != 0) return p;
    }
}

ContactFamilyParams random_contact(std::mt19937& rng) {
    for (;;) {
        ContactFamilyParams p;
        p.b = random_rational(rng);
        p.b0 = random_rational(rng, 9, true);
        p.b1 = random_rational(rng);
        p.b2 = random_rational(rng);
        p.b3 = random_rational(rng);
        p.b4 = random_rational(rng);
        p.b5 = random_rational(rng);
        p.b6 = random_rational(rng);
        if (p.b5 != p.b0 * p.b6) return p;
    }
}

}  // namespace

TEST_CASE("seed curve") {
    const ParametricCurve s = seed_curve();
    CHECK(incidence(seed_implicit(), s).is_zero());
    CHECK(verify_solution(s).solves);
    CHECK(s.x().evaluate(Rational(0)) == 1);
    CHECK(s.y().evaluate(Rational(0)) == 0);
}

TEST_CASE("canonical curve") {
    const CurvePair c = canonical_curve();
    CHECK(incidence(c.implicit, c.parametric).is_zero());
    CHECK(verify_solution(c.parametric).solves);
    CHECK(c.parametric.x().evaluate(Rational(0)) == 0);
    CHECK(c.parametric.y().evaluate(Rational(0)) == 0);
    // Affine degree 5; the sextic shows up after a projective change of x.
    CHECK(c.implicit.degree() == 5);
}

TEST_CASE("general solution") {
    const CurvePair id = general_solution(GeneralSolutionParams::identity());
    CHECK(id.implicit == canonical_curve().implicit);
    CHECK(id.parametric == canonical_curve().parametric);

    std::mt19937 rng(8);
    for (int i = 0; i < 4; ++i) {
        const GeneralSolutionParams p = random_params(rng);
        const CurvePair g = general_solution(p);
        CHECK(incidence(g.implicit, g.parametric).is_zero());
        CHECK(verify_solution(g.parametric).solves);
        if (p.c3 != 0 || p.c7 != 0) CHECK(g.implicit.degree() == 6);
        // Monic cubic in y up to c4^3.
        CHECK(g.implicit.polynomial().degree("y") == 3);
        CHECK(g.implicit.polynomial().coefficient("y", 3) == MultiPoly(p.c4 * p.c4 * p.c4));
    }

    GeneralSolutionParams bad;
    bad.c4 = 0;
    CHECK(code_of([&] { general_solution(bad); }) == ErrorCode::DegenerateMap);
    bad = {};
    bad.c5 = 1;
    bad.c6 = 1;
    bad.c7 = -1;
    CHECK(code_of([&] { general_solution(bad); }) == ErrorCode::DegenerateMap);
}

TEST_CASE("the forward map sends the canonical curve onto the general sextic") {
    // The untransformed canonical curve is not on it.
    std::mt19937 rng(9);
    const GeneralSolutionParams p = random_params(rng);
    const PointTransformationParams q = general_solution_map(p);
    const ParametricCurve moved = apply_point_transformation(canonical_curve().parametric, q);
    CHECK(incidence(ImplicitCurve(general_solution_polynomial(p)), moved).is_zero());
    CHECK_FALSE(incidence(ImplicitCurve(general_solution_polynomial(p)), canonical_curve().parametric).is_zero());
}

TEST_CASE("contact family") {
    std::mt19937 rng(10);
    for (int i = 0; i < 4; ++i) {
        const ContactFamilyParams p = random_contact(rng);
        const ParametricCurve base = contact_family_base(p);
        CHECK(contact_family_slope(p) == slope(base));
        CHECK(contact_family_slope_opposite(p) == -slope(base));
        const ContactCurve c = contact_family(p);
        CHECK(c.z * c.curve.x().derivative() == c.curve.y().derivative());
        CHECK(verify_solution(c.curve).solves);
    }

    ContactFamilyParams flat;
    flat.b0 = 2;
    flat.b5 = 6;
    flat.b6 = 3;
    CHECK(code_of([&] { contact_family(flat); }) == ErrorCode::DegenerateDenominator);
}

TEST_CASE("the z^2 flow moves the b = 0 member to the parameter-b member") {
    std::mt19937 rng(12);
    ContactFamilyParams p = random_contact(rng);
    const Rational b = p.b;
    p.b = 0;
    const ContactCurve flat = contact_family(p);
    CHECK(flat.curve == contact_family_base(p));
    const ContactCurve moved = apply_contact_flow(flat.curve, {ContactGenerator::H8, b});
    p.b = b;
    const ContactCurve direct = contact_family(p);
    CHECK(moved.curve == direct.curve);
    CHECK(moved.z == direct.z);
}

TEST_CASE("degree-four family") {
    const ImplicitCurve seed = degree_four_family(MultiPoly(0), P("x*(x - 1)^3"));
    CHECK(seed == seed_implicit());
    CHECK(code_of([] { degree_four_family(MultiPoly(0), P("x^4")); }) == ErrorCode::InadmissibleQuartic);
    CHECK(code_of([] { degree_four_family(MultiPoly(0), P("x^2*(x - 1)^2")); }) == ErrorCode::InadmissibleQuartic);
    CHECK(code_of([] { degree_four_family(MultiPoly(0), P("(x^2 + 1)*(x - 1)^2")); }) ==
          ErrorCode::InadmissibleQuartic);

    const auto sing = singular_points(seed);
    REQUIRE(sing.size() == 1);
    CHECK(*sing[0].x_exact == 1);
    CHECK(*sing[0].y_exact == 0);
    CHECK(sing[0].multiplicity == 2);

    const QuarticRoots r = admissible_quartic_roots(P("-2*(x - 3)^3*(x + 1/2)"));
    CHECK(r.k == -2);
    CHECK(r.triple == 3);
    CHECK(r.simple == Rational(-1, 2));
}

TEST_CASE("degree-four members are solutions") {
    std::mt19937 rng(13);
    for (int i = 0; i < 4; ++i) {
        const Rational a = random_rational(rng);
        Rational r = random_rational(rng);
        if (r == a) r += 1;
        const Rational k = random_rational(rng, 9, true);
        const MultiPoly Pq = (P("x") - MultiPoly(a)).pow(3) * (P("x") - MultiPoly(r)) * MultiPoly(k);
        const MultiPoly Q = P("x^2").scaled(random_rational(rng)) + P("x").scaled(random_rational(rng)) +
                            MultiPoly(random_rational(rng));
        const ParametricCurve c = degree_four_parametrization(Q, Pq);
        CHECK(incidence(degree_four_family(Q, Pq), c).is_zero());
        CHECK(verify_solution(c).solves);
    }
}

TEST_CASE("uv pair") {
    const UVPair flat = uv_pair(MultiPoly(0), P("x*(x - 1)^3"), 0);
    CHECK(flat.u == P("y^2 + x*(x - 1)^3"));

    std::mt19937 rng(14);
    ContactFamilyParams p = seed_contact_params(random_rational(rng, 9, true));
    const ContactCurve c = contact_family(p);
    const UVPair uv = uv_pair(MultiPoly(0), P("x*(x - 1)^3"), p.b);
    const Bindings along{{"x", c.curve.x()}, {"y", c.curve.y()}, {"z", c.z}};
    CHECK(substitute_rational(uv.u, along).is_zero());
    CHECK(substitute_rational(uv.v, along).is_zero());

    // Symbolic b specialises to the numeric pair.
    const UVPair sym = uv_pair_symbolic(MultiPoly(0), P("x*(x - 1)^3"));
    CHECK(sym.u.evaluate("b", p.b) == uv.u);
    CHECK(sym.v.evaluate("b", p.b) == uv.v);

    // A nonzero Q with a matching curve: the member of (y + Q)^2 + P moved by the z^2 flow.
    const MultiPoly Q = P("x^2 - 2*x + 1/3");
    const MultiPoly Pq = P("3*(x + 1)^3*(x - 2)");
    const ParametricCurve base = degree_four_parametrization(Q, Pq);
    const ContactCurve moved = apply_contact_flow(base, {ContactGenerator::H8, Rational(2, 5)});
    const UVPair uvq = uv_pair(Q, Pq, Rational(2, 5));
    const Bindings along_q{{"x", moved.curve.x()}, {"y", moved.curve.y()}, {"z", moved.z}};
    CHECK(substitute_rational(uvq.u, along_q).is_zero());
    CHECK(substitute_rational(uvq.v, along_q).is_zero());
}

TEST_CASE("new curve") {
    CHECK(code_of([] { new_curve(0); }) == ErrorCode::DegenerateLeading);
    const ImplicitCurve c = new_curve(Rational(1, 2));
    CHECK(c.degree() == 6);
    const auto q = discriminant_is_cube(c);
    REQUIRE(q.has_value());
    CHECK(count_real_roots(q->to_unipoly("x")) == 2);
    const auto roots = complex_roots(*q);
    REQUIRE(roots.size() == 4);
    CHECK(equianharmonic_check({roots[0], roots[1], roots[2], roots[3]}).equianharmonic);
}

TEST_CASE("elimination splits into the solution and a spurious factor") {
    const Rational b(1, 2);
    const EliminationSplit s = split_elimination(b);
    CHECK(s.solution == new_curve(b).polynomial());
    CHECK_FALSE(s.spurious.is_constant());
    CHECK(s.solution * s.spurious == s.resultant);
    const ContactCurve c = contact_family(seed_contact_params(b));
    CHECK(substitute_rational(s.solution, {{"x", c.curve.x()}, {"y", c.curve.y()}}).is_zero());
    CHECK(verify_solution(c.curve).solves);
    CHECK(code_of([] { split_elimination(0); }) == ErrorCode::DegenerateLeading);
}

TEST_CASE("the z root equal to y' lies on the solution factor") {
    const Rational b(1, 2);
    const ContactCurve c = contact_family(seed_contact_params(b));
    const UVPair uv = uv_pair(MultiPoly(0), P("x*(x - 1)^3"), b);
    const ImplicitCurve f = new_curve(b);
    for (const Rational t : {Rational(1, 3), Rational(2), Rational(-5, 7)}) {
        const Rational x0 = c.curve.x().evaluate(t), y0 = c.curve.y().evaluate(t);
        const ExactJet j = implicit_jet(f, x0, y0, 1);
        const std::map<std::string, Rational> at{{"x", x0}, {"y", y0}, {"z", j.y[1]}};
        CHECK(uv.u.evaluate(at).is_zero());
        CHECK(uv.v.evaluate(at).is_zero());
    }
}

TEST_CASE("conic family") {
    const ConicFamily parabola = conic_family({0, 0, 0, 1, 0}, std::pair{Rational(0), Rational(0)});
    CHECK(parabola.implicit.polynomial() == P("y^2 - x"));
    REQUIRE(parabola.parametric.has_value());
    CHECK(halphen_residual(*parabola.parametric).is_zero());
    CHECK(halphen_residual(ParametricCurve(RationalFunction::parse("t^2"), RationalFunction::t())).is_zero());

    const ConicFamily circle = conic_family({-1, 0, 0, 0, 1}, std::pair{Rational(1), Rational(0)});
    REQUIRE(circle.parametric.has_value());
    CHECK(incidence(circle.implicit, *circle.parametric).is_zero());
    CHECK(halphen_residual(*circle.parametric).is_zero());

    CHECK_FALSE(conic_family({1, 0, 0, 0, 1}).parametric.has_value());
    CHECK(code_of([] { conic_family({1, 0, 0, 0, 0}); }) == ErrorCode::DegenerateConic);
    CHECK(code_of([] { conic_family({-1, 0, 0, 0, 1}, std::pair{Rational(2), Rational(0)}); }) ==
          ErrorCode::NotOnCurve);

    std::mt19937 rng(15);
    for (int i = 0; i < 5; ++i) {
        std::array<Rational, 5> c{random_rational(rng), random_rational(rng), random_rational(rng),
                                  random_rational(rng), 0};
        const Rational x0 = random_rational(rng), y0 = random_rational(rng);
        c[4] = y0 * y0 - c[0] * x0 * x0 - c[1] * x0 * y0 - c[2] * y0 - c[3] * x0;
        try {
            const ConicFamily f = conic_family(c, std::pair{x0, y0});
            CHECK(incidence(f.implicit, *f.parametric).is_zero());
            CHECK(halphen_residual(*f.parametric).is_zero());
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::DegenerateConic);
        }
    }
}
