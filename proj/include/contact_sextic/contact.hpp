#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "contact_sextic/curve_types.hpp"
#include "contact_sextic/multipoly.hpp"

namespace contact_sextic {

// Line-element space with coordinates (x, y, z) and contact form
// omega = dy - z dx.

/// Generating function H(x, y, z) of a contact vector field.
struct ContactHamiltonian {
    MultiPoly H;

    /// Prolonged point fields have generating functions affine in z.
    bool is_point_type() const { return H.degree("z") <= 1; }
    friend bool operator==(const ContactHamiltonian&, const ContactHamiltonian&) = default;
};

/// Vector field xx*d/dx + xy*d/dy + xz*d/dz with polynomial components.
struct ContactField {
    MultiPoly xx;
    MultiPoly xy;
    MultiPoly xz;

    friend bool operator==(const ContactField&, const ContactField&) = default;
};

/// Coefficients of a 1-form a dx + b dy + c dz.
struct OneForm {
    MultiPoly dx;
    MultiPoly dy;
    MultiPoly dz;
};

/// X_H = -H_z d/dx + (H - z H_z) d/dy + (H_x + z H_y) d/dz.
ContactField field_from_hamiltonian(const ContactHamiltonian& h);

/// omega(X) = X^y - z X^x; inverse of field_from_hamiltonian on contact fields.
ContactHamiltonian contract_with_contact_form(const ContactField& field);

/// Componentwise [X, Y] = X(Y^i) - Y(X^i).
ContactField commutator(const ContactField& a, const ContactField& b);

/// L_X omega = d(omega(X)) + X _| d omega, computed from the field alone.
OneForm lie_derivative_of_contact_form(const ContactField& field);

/// The multiplier c with L_X omega = c * omega, or nullopt if the field is not
/// a contact field.
std::optional<MultiPoly> contact_multiplier(const ContactField& field);

/// omega([X_H, X_G]).
ContactHamiltonian lagrange_bracket(const ContactHamiltonian& h, const ContactHamiltonian& g);

/// The ten generating functions
///   1, x, x^2, y, z, xz, x^2 z - 2xy, z^2, 2yz - x z^2, 4xyz - 4y^2 - x^2 z^2.
/// The first seven are point type, the last three proper contact.
std::array<ContactHamiltonian, 10> symmetry_generators();
std::array<std::string, 10> symmetry_generator_names();

using RationalMatrix = std::vector<std::vector<Rational>>;

struct Signature {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};

struct AlgebraTable {
    std::array<ContactHamiltonian, 10> basis;
    /// structure[i][j][k]: coefficient of basis[k] in {basis[i], basis[j]}.
    std::vector<RationalMatrix> structure;
    /// killing[i][j] = tr(ad_i ad_j).
    RationalMatrix killing;
    /// Rank of the basis as polynomials (10 for a genuine basis).
    int span_dimension = 0;

    bool is_antisymmetric() const;
    bool satisfies_jacobi() const;
    Rational killing_determinant() const;
    Signature killing_signature() const;
    int point_type_count() const;
};

/// Brackets all 45 pairs and solves for them exactly in the span of the basis.
/// Throws ClosureFailure if a bracket leaves the span.
AlgebraTable build_algebra_table();

/// Rank of a list of polynomials as vectors over Q.
int span_dimension(const std::vector<MultiPoly>& polys);

/// Coordinates of target in the span of basis, or nullopt when it is outside.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<MultiPoly>& basis, const MultiPoly& target);

Rational determinant(RationalMatrix m);
/// Exact congruence diagonalisation of a symmetric matrix.
Signature symmetric_signature(RationalMatrix m);

/// Parameters of the seven-dimensional point group. Applied to a curve in the
/// order: x -> c5 x + c6, then (x, y) -> (x/(1 + c7 x), y/(1 + c7 x)^2), then
/// y -> c4 y + c1 + c2 x + c3 x^2.
struct PointTransformationParams {
    Rational c1 = 0, c2 = 0, c3 = 0, c4 = 1, c5 = 1, c6 = 0, c7 = 0;

    static PointTransformationParams identity() { return {}; }
    friend bool operator==(const PointTransformationParams&, const PointTransformationParams&) = default;
};

/// Throws DegenerateMap if c4 = 0 or c5 = 0, DegenerateDenominator if
/// 1 + c7 (c5 x + c6) vanishes identically along the curve.
ParametricCurve apply_point_transformation(const ParametricCurve& curve, const PointTransformationParams& p);

enum class ContactGenerator { H8, H9, H10 };

struct ContactFlowParams {
    ContactGenerator generator = ContactGenerator::H8;
    Rational parameter = 0;
};

/// Lifts the curve with z = ydot/xdot and applies the closed-form time-c flow
/// of z^2, 2yz - xz^2 or 4xyz - 4y^2 - x^2 z^2. Throws VerticalCurve when
/// xdot = 0 and DegenerateDenominator when the map's denominator vanishes
/// identically along the curve.
ContactCurve apply_contact_flow(const ParametricCurve& curve, const ContactFlowParams& flow);
ContactCurve apply_contact_flow(const ContactCurve& lifted, const ContactFlowParams& flow);

/// z = ydot/xdot. Throws VerticalCurve when xdot = 0.
RationalFunction slope(const ParametricCurve& curve);

}  // namespace contact_sextic
