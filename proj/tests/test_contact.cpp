#include <doctest.h>

#include <random>

#include "contact_sextic/contact.hpp"
#include "contact_sextic/curves.hpp"
#include "contact_sextic/error.hpp"
#include "test_support.hpp"

using namespace contact_sextic;
using contact_sextic::testing::P;
using contact_sextic::testing::random_poly;
using contact_sextic::testing::random_rational;

namespace {

ContactHamiltonian H(const std::string& text) { return {P(text)}; }

RationalFunction R(const std::string& text) { return RationalFunction::parse(text); }

ParametricCurve canform_curve() {
    return {R("t*(t^2 - 3)/(3*(t^2 + 1))"), R("-4*t*(t^4 + 3)/(3*(t^2 + 1)^2)")};
}

}  // namespace

TEST_CASE("field_from_hamiltonian examples") {
    CHECK(field_from_hamiltonian(H("1")) == ContactField{P("0"), P("1"), P("0")});
    CHECK(field_from_hamiltonian(H("z")) == ContactField{P("-1"), P("0"), P("0")});
    CHECK(field_from_hamiltonian(H("z^2")) == ContactField{P("-2*z"), P("-z^2"), P("0")});
    CHECK(field_from_hamiltonian(H("x")) == ContactField{P("0"), P("x"), P("1")});
}

TEST_CASE("contraction with the contact form inverts the field map") {
    std::mt19937 rng(11);
    for (int i = 0; i < 25; ++i) {
        const ContactHamiltonian h{random_poly(rng, {"x", "y", "z"}, 3, 6)};
        CHECK(contract_with_contact_form(field_from_hamiltonian(h)) == h);
    }
}

TEST_CASE("every generated field satisfies the contact condition") {
    std::mt19937 rng(12);
    auto check = [](const ContactHamiltonian& h) {
        const ContactField f = field_from_hamiltonian(h);
        const OneForm l = lie_derivative_of_contact_form(f);
        // L omega - c omega with c the dy coefficient; omega = -z dx + dy.
        CHECK((l.dx + l.dy * P("z")).is_zero());
        CHECK(l.dz.is_zero());
        const auto c = contact_multiplier(f);
        REQUIRE(c.has_value());
        CHECK(*c == l.dy);
    };
    for (const auto& h : symmetry_generators()) check(h);
    for (int i = 0; i < 10; ++i) check({random_poly(rng, {"x", "y", "z"}, 3, 5)});
}

TEST_CASE("a field that is not contact has no multiplier") {
    // d/dz alone rotates the contact planes.
    CHECK_FALSE(contact_multiplier(ContactField{P("0"), P("0"), P("1")}).has_value());
}

TEST_CASE("lagrange bracket examples") {
    CHECK(lagrange_bracket(H("1"), H("x")).H.is_zero());
    CHECK(lagrange_bracket(H("z"), H("x")).H == P("-1"));
    CHECK(lagrange_bracket(H("1"), H("y")).H == P("1"));
    for (const auto& h : symmetry_generators()) CHECK(lagrange_bracket(h, h).H.is_zero());
}

TEST_CASE("bracket agrees with the commutator of fields") {
    const auto gens = symmetry_generators();
    for (const auto& a : gens)
        for (const auto& b : gens)
            CHECK(field_from_hamiltonian(lagrange_bracket(a, b)) ==
                  commutator(field_from_hamiltonian(a), field_from_hamiltonian(b)));
}

TEST_CASE("generator list") {
    const auto gens = symmetry_generators();
    const auto names = symmetry_generator_names();
    for (std::size_t i = 0; i < gens.size(); ++i) {
        CHECK(gens[i].H == P(names[i]));
        CHECK(gens[i].is_point_type() == (i < 7));
    }
}

TEST_CASE("ten-dimensional symmetry algebra") {
    const AlgebraTable table = build_algebra_table();
    CHECK(table.span_dimension == 10);
    CHECK(table.point_type_count() == 7);
    CHECK(table.is_antisymmetric());
    CHECK(table.satisfies_jacobi());
    CHECK(table.structure[0][3][0] == 1);
    for (int k = 0; k < 10; ++k) CHECK(table.structure[0][3][k] == (k == 0 ? 1 : 0));
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) CHECK(table.killing[i][j] == table.killing[j][i]);
    CHECK(table.killing_determinant() != 0);
    const Signature s = table.killing_signature();
    CHECK(s.positive + s.negative == 10);
    CHECK(s.zero == 0);

    // Each table entry reproduces the symbolic bracket.
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            MultiPoly sum;
            for (int k = 0; k < 10; ++k) sum += table.basis[k].H.scaled(table.structure[i][j][k]);
            CHECK(sum == lagrange_bracket(table.basis[i], table.basis[j]).H);
        }
}

TEST_CASE("span and solve helpers") {
    CHECK(span_dimension({P("x"), P("2*x"), P("y")}) == 2);
    const auto c = solve_in_span({P("x"), P("y")}, P("3*x - y"));
    REQUIRE(c.has_value());
    CHECK((*c)[0] == 3);
    CHECK((*c)[1] == -1);
    CHECK_FALSE(solve_in_span({P("x"), P("y")}, P("z")).has_value());
}

TEST_CASE("exact matrix helpers") {
    CHECK(determinant({{1, 2}, {3, 4}}) == -2);
    CHECK(determinant({{0, 1}, {1, 0}}) == -1);
    const Signature s = symmetric_signature({{0, 1}, {1, 0}});
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
    const Signature d = symmetric_signature({{2, 0, 0}, {0, 0, 0}, {0, 0, -3}});
    CHECK(d.positive == 1);
    CHECK(d.negative == 1);
    CHECK(d.zero == 1);
}

TEST_CASE("point transformation examples") {
    const ParametricCurve parabola(R("t"), R("t^2"));
    CHECK(apply_point_transformation(parabola, PointTransformationParams::identity()) == parabola);

    PointTransformationParams shift;
    shift.c6 = Rational(3, 2);
    const ParametricCurve moved = apply_point_transformation(parabola, shift);
    CHECK(moved.x() == R("t + 3/2"));
    CHECK(moved.y() == R("t^2"));

    PointTransformationParams bad;
    bad.c4 = 0;
    CHECK_THROWS_AS(apply_point_transformation(parabola, bad), Error);
    try {
        apply_point_transformation(parabola, bad);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateMap);
    }
    bad = {};
    bad.c5 = 0;
    CHECK_THROWS_AS(apply_point_transformation(parabola, bad), Error);

    // 1 + c7 x vanishes identically on a vertical line x = -1.
    PointTransformationParams c7;
    c7.c7 = 1;
    try {
        apply_point_transformation(ParametricCurve(R("-1"), R("t")), c7);
        FAIL("expected DegenerateDenominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateDenominator);
    }
}

TEST_CASE("point transformations preserve solutions") {
    std::mt19937 rng(21);
    for (int i = 0; i < 3; ++i) {
        PointTransformationParams p;
        p.c1 = random_rational(rng);
        p.c2 = random_rational(rng);
        p.c3 = random_rational(rng);
        p.c4 = random_rational(rng, 9, true);
        p.c5 = random_rational(rng, 9, true);
        p.c6 = random_rational(rng);
        p.c7 = random_rational(rng);
        CHECK(verify_solution(apply_point_transformation(canform_curve(), p)).solves);
    }
}

TEST_CASE("contact flow examples") {
    const ParametricCurve parabola(R("t"), R("t^2"));
    for (auto g : {ContactGenerator::H8, ContactGenerator::H9, ContactGenerator::H10}) {
        const ContactCurve c = apply_contact_flow(parabola, {g, 0});
        CHECK(c.curve == parabola);
        CHECK(c.z == R("2*t"));
    }
    const Rational c9(2, 7);
    const ContactCurve moved = apply_contact_flow(parabola, {ContactGenerator::H9, c9});
    const RationalFunction d = RationalFunction(1) - RationalFunction(2 * c9) * R("t");
    CHECK(moved.curve.x() == R("t") / d);
    CHECK(moved.curve.y() == R("t^2") / d.pow(2));
    CHECK(moved.curve.y() == moved.curve.x().pow(2));

    try {
        apply_contact_flow(ParametricCurve(R("1"), R("t")), {ContactGenerator::H8, 1});
        FAIL("expected VerticalCurve");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::VerticalCurve);
    }
    // 1 - c9 z with z = 1/2 and c9 = 2 vanishes identically.
    try {
        apply_contact_flow(ParametricCurve(R("t"), R("t/2")), {ContactGenerator::H9, 2});
        FAIL("expected DegenerateDenominator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DegenerateDenominator);
    }
}

TEST_CASE("contact flows keep curves contact and form one-parameter groups") {
    std::mt19937 rng(31);
    const ParametricCurve cubic(R("t"), R("t^3 - t"));
    for (auto g : {ContactGenerator::H8, ContactGenerator::H9, ContactGenerator::H10}) {
        const Rational s = random_rational(rng, 5, true);
        const Rational u = random_rational(rng, 5, true);
        const ContactCurve a = apply_contact_flow(cubic, {g, s});
        CHECK(a.z * a.curve.x().derivative() == a.curve.y().derivative());
        const ContactCurve b = apply_contact_flow(a, {g, u});
        const ContactCurve direct = apply_contact_flow(cubic, {g, s + u});
        CHECK(b.curve == direct.curve);
        CHECK(b.z == direct.z);
        const ContactCurve back = apply_contact_flow(a, {g, -s});
        CHECK(back.curve == cubic);
    }
}

TEST_CASE("contact flows preserve solutions") {
    std::mt19937 rng(41);
    for (auto g : {ContactGenerator::H8, ContactGenerator::H9, ContactGenerator::H10}) {
        const Rational s = random_rational(rng, 5, true);
        const ContactCurve c = apply_contact_flow(canform_curve(), {g, s});
        CHECK(verify_solution(c.curve).solves);
    }
}

TEST_CASE("slope") {
    CHECK(slope(ParametricCurve(R("t^2"), R("t^3"))) == R("3/2*t"));
    CHECK_THROWS_AS(slope(ParametricCurve(R("2"), R("t"))), Error);
}
