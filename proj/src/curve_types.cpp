#include "contact_sextic/curve_types.hpp"

#include "contact_sextic/error.hpp"

namespace contact_sextic {

ParametricCurve::ParametricCurve(RationalFunction x, RationalFunction y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.is_constant() && y_.is_constant())
        throw Error(ErrorCode::InvalidArgument, "a parametric curve needs a nonconstant component");
}

ImplicitCurve::ImplicitCurve(MultiPoly f) : f_(std::move(f)) {
    if (f_.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "implicit curve from the zero polynomial");
    for (const auto& v : f_.variables())
        if (v != "x" && v != "y") throw Error(ErrorCode::InvalidArgument, "implicit curves live in (x, y), got " + v);
}

}  // namespace contact_sextic
