#pragma once

#include "contact_sextic/multipoly.hpp"
#include "contact_sextic/rational_function.hpp"

namespace contact_sextic {

/// Plane curve t -> (x(t), y(t)) with rational components.
class ParametricCurve {
public:
    /// Throws InvalidArgument when both components are constant.
    ParametricCurve(RationalFunction x, RationalFunction y);

    const RationalFunction& x() const { return x_; }
    const RationalFunction& y() const { return y_; }

    friend bool operator==(const ParametricCurve&, const ParametricCurve&) = default;

private:
    RationalFunction x_;
    RationalFunction y_;
};

/// A parametrised curve lifted to line elements: (x(t), y(t), z(t)).
struct ContactCurve {
    ParametricCurve curve;
    RationalFunction z;
};

/// Zero set of a nonzero polynomial f(x, y).
class ImplicitCurve {
public:
    /// Throws ZeroPolynomial on f = 0 and InvalidArgument if f involves
    /// variables other than x and y.
    explicit ImplicitCurve(MultiPoly f);

    const MultiPoly& polynomial() const { return f_; }
    unsigned degree() const { return f_.total_degree(); }

    friend bool operator==(const ImplicitCurve&, const ImplicitCurve&) = default;

private:
    MultiPoly f_;
};

}  // namespace contact_sextic
