#pragma once

#include <array>
#include <optional>
#include <utility>

#include "contact_sextic/contact.hpp"
#include "contact_sextic/curve_types.hpp"
#include "contact_sextic/multipoly.hpp"
#include "contact_sextic/rational_function.hpp"

namespace contact_sextic {

struct CurvePair {
    ImplicitCurve implicit;
    ParametricCurve parametric;
};

/// x = 1/(t^2 + 1), y = -t^3/(t^2 + 1)^2 on y^2 + x(x - 1)^3 = 0.
ParametricCurve seed_curve();
ImplicitCurve seed_implicit();

/// y^3 + 3(3x^4 - 6x^2 - 1) y + 12x(3x^4 + 1) = 0 with
/// x = t(t^2 - 3)/(3(t^2 + 1)), y = -4t(t^4 + 3)/(3(t^2 + 1)^2).
CurvePair canonical_curve();

/// Seven parameters of the general sextic solution.
struct GeneralSolutionParams {
    Rational c1 = 0, c2 = 0, c3 = 0, c4 = 1, c5 = 1, c6 = 0, c7 = 0;

    static GeneralSolutionParams identity() { return {}; }
    static GeneralSolutionParams from_array(const std::array<Rational, 7>& c);
    std::array<Rational, 7> to_array() const;
    friend bool operator==(const GeneralSolutionParams&, const GeneralSolutionParams&) = default;
};

/// Y^3 + 3(3S^4 - 6S^2 W^2 - W^4) Y + 12 S (3 S^4 W + W^5) with
/// Y = c4 y + c1 + c2 x + c3 x^2, S = c5 x + c6, W = 1 - c7 x.
/// No admissibility check.
MultiPoly general_solution_polynomial(const GeneralSolutionParams& p);

/// Point transformation carrying the canonical curve onto the zero set of
/// general_solution_polynomial(p). Throws DegenerateMap if c4 = 0 or
/// c5 + c6 c7 = 0 (the x-Mobius map is singular).
PointTransformationParams general_solution_map(const GeneralSolutionParams& p);

/// Implicit sextic together with the transported canonical parametrisation.
CurvePair general_solution(const GeneralSolutionParams& p);

struct ContactFamilyParams {
    Rational b = 0, b0 = 1, b1 = 0, b2 = 0, b3 = 0, b4 = 0, b5 = 0, b6 = 1;
};

/// x = (b5 + b6 t^2)/(b0 + t^2), y = (b4 t^4 + b3 t^2 + b2 t + b1)/(b0 + t^2)^2.
/// Throws DegenerateDenominator if b5 = b0 b6 (x constant).
ParametricCurve contact_family_base(const ContactFamilyParams& p);

/// Closed form of ydot/xdot for the base curve:
/// ((4 b4 b0 - 2 b3) t^3 - 3 b2 t^2 + (2 b3 b0 - 4 b1) t + b2 b0) / (2 (b0 b6 - b5)(b0 t + t^3)).
RationalFunction contact_family_slope(const ContactFamilyParams& p);

/// The slope with the opposite sign convention 2 (b5 - b0 b6) in the
/// denominator; kept to document that it equals -ydot/xdot.
RationalFunction contact_family_slope_opposite(const ContactFamilyParams& p);

/// The base curve moved by the z^2 contact flow with parameter b:
/// (x - 2bz, y - bz^2, z).
ContactCurve contact_family(const ContactFamilyParams& p);

/// (y + Q)^2 + P with Q quadratic and P a quartic with one simple and one
/// triple root, both polynomials in x. Throws InadmissibleQuartic.
ImplicitCurve degree_four_family(const MultiPoly& Q, const MultiPoly& P);

/// Rational parametrisation of (y + Q)^2 + P = 0 for admissible P. For
/// P = k (x - a)^3 (x - r): x = r + (a - r) s, y = -Q(x) + (a - r)^2 (s - 1) m s,
/// s = k/(m^2 + k), with parameter m. Throws InadmissibleQuartic.
ParametricCurve degree_four_parametrization(const MultiPoly& Q, const MultiPoly& P);

/// Factors of an admissible quartic: k (x - a)^3 (x - r).
struct QuarticRoots {
    Rational k, triple, simple;
};
QuarticRoots admissible_quartic_roots(const MultiPoly& P);

/// u = (y + b z^2 + Q(X))^2 + P(X), v = 4 P(X) (z + Q'(X))^2 + P'(X)^2 with
/// X = x + 2 b z. Q and P are polynomials in x. Throws InadmissibleQuartic.
struct UVPair {
    MultiPoly u;
    MultiPoly v;
};
UVPair uv_pair(const MultiPoly& Q, const MultiPoly& P, const Rational& b);
/// Same with b kept as the symbol "b".
UVPair uv_pair_symbolic(const MultiPoly& Q, const MultiPoly& P);

/// The degree-six curve obtained from Q = 0, P = X(X - 1)^3 as a polynomial in
/// (x, y, b).
const MultiPoly& new_curve_polynomial();
/// Throws DegenerateLeading when 64 b + 1024 b^3 = 0.
ImplicitCurve new_curve(const Rational& b);

/// The two factors of Res_z(u, v) for Q = 0, P = X(X - 1)^3.
struct EliminationSplit {
    MultiPoly resultant;
    MultiPoly solution;  // vanishes on the contact curve, where z = y'
    MultiPoly spurious;  // the exact cofactor
};

/// Divides the resultant by the new-curve polynomial and decides which factor
/// is the solution by evaluating both on the contact curve with the same b
/// (the one whose common z-root equals y'). Throws BranchSelectionFailure if
/// the test does not single out exactly one factor.
EliminationSplit split_elimination(const Rational& b);
/// Same over Q[b]; the selection test is made at b = probe.
EliminationSplit split_elimination_symbolic(const Rational& probe = Rational(1, 2));

/// The member of the contact family whose underlying quartic curve is
/// y^2 + x(x - 1)^3: b0 = 1, b2 = -1, b6 = 1, other b_i = 0.
ContactFamilyParams seed_contact_params(const Rational& b);

/// y^2 = c1 x^2 + c2 x y + c3 y + c4 x + c5.
struct ConicFamily {
    ImplicitCurve implicit;
    std::optional<ParametricCurve> parametric;
};

/// With a point on the conic, parametrises by the slope m of lines through it.
/// Throws DegenerateConic for a degenerate conic and NotOnCurve if the point
/// is not on it.
ConicFamily conic_family(const std::array<Rational, 5>& c,
                         const std::optional<std::pair<Rational, Rational>>& point = std::nullopt);

}  // namespace contact_sextic
