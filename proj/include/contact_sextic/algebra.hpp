#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "contact_sextic/multipoly.hpp"
#include "contact_sextic/rational_function.hpp"

namespace contact_sextic {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Sylvester matrix of u and v in var: n rows of u's coefficients followed by
/// m rows of v's, each row listing coefficients from the highest power down.
PolyMatrix sylvester_matrix(const MultiPoly& u, const MultiPoly& v, std::string_view var);

/// Fraction-free Bareiss elimination over the polynomial ring. Row swaps are
/// tracked so the sign of the result is that of the true determinant.
MultiPoly bareiss_determinant(PolyMatrix m);

/// Res_var(u, v) = det of the Sylvester matrix. Throws ZeroDegree if either
/// polynomial does not involve var.
MultiPoly resultant(const MultiPoly& u, const MultiPoly& v, std::string_view var);

/// (-1)^(d(d-1)/2) Res(f, df/dvar) / lc(f), so disc(y^3 + p y + q) = -4p^3 - 27q^2.
MultiPoly discriminant_wrt(const MultiPoly& f, std::string_view var);

struct SquareFreePart {
    MultiPoly factor;  // monic, square-free
    unsigned multiplicity;
};

struct SquareFreeDecomposition {
    Rational content;
    std::vector<SquareFreePart> parts;  // increasing multiplicity

    MultiPoly reassemble() const;
};

/// Yun's algorithm on a univariate polynomial. Throws ZeroPolynomial on 0.
SquareFreeDecomposition square_free_decomposition(const MultiPoly& f);

/// Monic gcd of two univariate polynomials in the same variable.
MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

using Bindings = std::map<std::string, RationalFunction>;

/// f(bindings) * prod_v den(v)^deg_v(f): the numerator of f along the
/// parametrisation with every binding's denominator cleared to the full
/// degree of f in that variable. Zero iff f vanishes on the curve.
/// Throws UnboundVariable when f mentions a variable with no binding.
MultiPoly substitute_rational(const MultiPoly& f, const Bindings& bindings);

/// The same substitution, returned as a reduced rational function of t.
RationalFunction evaluate_rational(const MultiPoly& f, const Bindings& bindings);

}  // namespace contact_sextic
