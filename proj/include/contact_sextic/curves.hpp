#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <vector>

#include "contact_sextic/curve_types.hpp"
#include "contact_sextic/multipoly.hpp"
#include "contact_sextic/rational_function.hpp"

namespace contact_sextic {

/// Derivative data of a graph y(x) at x0: y[k] is the k-th derivative, k = 0..order.
template <class T>
struct Jet7 {
    T x0{};
    std::vector<T> y;

    int order() const { return static_cast<int>(y.size()) - 1; }
};

using ExactJet = Jet7<Rational>;
using NumericJet = Jet7<double>;

NumericJet to_numeric(const ExactJet& jet);

/// y', y'', ..., y^(order) along the curve via d/dx = (1/xdot) d/dt.
/// Throws VerticalCurve if xdot = 0.
std::vector<RationalFunction> jet_from_parametric(const ParametricCurve& curve, unsigned order);

/// F(y3, ..., y7) = 10 y3^3 y7 - 70 y3^2 y4 y6 - 49 y3^2 y5^2 + 280 y3 y4^2 y5 - 175 y4^4
/// as a polynomial in the jet variables "y3".."y7".
const MultiPoly& seventh_order_polynomial();

/// 9 y2^2 y5 - 45 y2 y3 y4 + 40 y3^3 in the jet variables "y2".."y5".
const MultiPoly& halphen_polynomial();

/// Numerator (in t) of the seventh-order expression along the curve.
MultiPoly ode_residual(const ParametricCurve& curve);

struct Verification {
    bool solves = false;
    MultiPoly residual;
};

Verification verify_solution(const ParametricCurve& curve);

/// Numerator of the fifth-order conic expression along the curve.
MultiPoly halphen_residual(const ParametricCurve& curve);

/// Derivatives y(x0), y'(x0), ..., y^(order)(x0) of the branch of f = 0
/// through (x0, y0). Throws NotOnCurve or SingularBranch (f_y = 0).
ExactJet implicit_jet(const ImplicitCurve& curve, const Rational& x0, const Rational& y0, unsigned order);

struct SingularPoint {
    /// Exact coordinates when both are rational.
    std::optional<Rational> x_exact;
    std::optional<Rational> y_exact;
    std::complex<double> x;
    std::complex<double> y;
    unsigned multiplicity = 0;

    bool is_exact() const { return x_exact.has_value() && y_exact.has_value(); }
    bool is_real(double tol = 1e-9) const { return std::abs(x.imag()) <= tol && std::abs(y.imag()) <= tol; }
};

/// Affine points with f = f_x = f_y = 0, found by eliminating y with
/// resultants. Rational points are exact; the rest are numeric, with the
/// multiplicity judged at relative tolerance 1e-8. Throws NonZeroDimensional
/// if f, f_x, f_y share a curve component.
std::vector<SingularPoint> singular_points(const ImplicitCurve& curve);

/// Multiplicity at an exact point: smallest order of a nonvanishing partial.
unsigned multiplicity_at(const MultiPoly& f, const Rational& x0, const Rational& y0);

/// F(1, x, y) for the homogenisation F(X, Y, W) of f, with the chart
/// coordinates renamed: points at infinity of f with X != 0 appear as the
/// points of the returned curve on the line y = 0 (x = Y/X, y = W/X).
ImplicitCurve chart_at_infinity_x(const ImplicitCurve& curve);
/// Same with Y = 1 (x = X/Y, y = W/Y).
ImplicitCurve chart_at_infinity_y(const ImplicitCurve& curve);

/// (d-1)(d-2)/2 - sum(deltas). Throws InvalidArgument for d < 1 or a negative delta.
long arithmetic_genus(long degree, const std::vector<long>& deltas);

/// Binary sextic a1 x^6 + 6 a2 x^5 + 15 a3 x^4 + 20 a4 x^3 + 15 a5 x^2 + 6 a6 x + a7.
struct SexticForm {
    std::array<Rational, 7> a{};

    static SexticForm from_polynomial(const MultiPoly& p);  // univariate in x, degree <= 6
    MultiPoly to_polynomial() const;
    /// (c x + d)^6 p((a x + b)/(c x + d)).
    SexticForm mobius(const Rational& a, const Rational& b, const Rational& c, const Rational& d) const;
};

/// a1 a7 - 6 a2 a6 + 15 a3 a5 - 10 a4^2.
Rational quadratic_invariant(const SexticForm& s);

using Complex = std::complex<double>;

/// A point of the Riemann sphere; infinity is represented by an infinite real part.
inline Complex infinity_point() { return {std::numeric_limits<double>::infinity(), 0.0}; }
inline bool is_infinite(const Complex& z) { return std::isinf(z.real()) || std::isinf(z.imag()); }

/// (z1 - z3)(z2 - z4) / ((z2 - z3)(z1 - z4)), evaluated in homogeneous
/// coordinates so that one argument may be infinite. Throws CoincidentPoints.
Complex cross_ratio(Complex z1, Complex z2, Complex z3, Complex z4);

struct EquianharmonicCheck {
    bool equianharmonic = false;
    Complex cross_ratio;
    double distance = 0.0;  // to the nearer of exp(+-i pi/3)
};

/// Compares the cross-ratio of the four roots with exp(+-i pi/3), the orbit of
/// exp(i pi/3) under reordering.
EquianharmonicCheck equianharmonic_check(const std::array<Complex, 4>& roots, double tolerance = 1e-10);

/// The monic square-free quartic Q when disc_y f = const * Q^3, otherwise
/// nullopt. Throws InvalidArgument unless f has degree 3 in y.
std::optional<MultiPoly> discriminant_is_cube(const ImplicitCurve& curve);

}  // namespace contact_sextic
