#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contact_sextic/rational.hpp"
#include "contact_sextic/unipoly.hpp"

namespace contact_sextic {

/// Global variable order used for every canonical form: t < x < y < z, then
/// any other name (parameters) in natural order, so b2 < b10 and c7 < c10.
bool variable_less(std::string_view a, std::string_view b);

using Exponents = std::vector<std::uint32_t>;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Canonical form: the variable list holds exactly the variables that occur
/// in some term, sorted by variable_less; no zero coefficients are stored; the
/// terms are kept in graded lexicographic order with the highest-ranked
/// variable most significant. Two polynomials compare equal iff their
/// canonical forms coincide.
class MultiPoly {
public:
    struct GrlexGreater {
        bool operator()(const Exponents& a, const Exponents& b) const;
    };
    using TermMap = std::map<Exponents, Rational, GrlexGreater>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    MultiPoly(std::vector<std::string> variables, TermMap terms);

    static MultiPoly variable(const std::string& name);
    static MultiPoly from_unipoly(const UniPoly& p, const std::string& var);
    /// Parses the canonical text form as well as ordinary infix input such as
    /// "y^2 + x*(x-1)^3" or "3/2*x - 1". Division is only allowed by constants.
    static MultiPoly parse(std::string_view text);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    Rational constant_value() const;  // requires is_constant()
    bool has_variable(std::string_view v) const;

    unsigned degree(std::string_view var) const;
    unsigned total_degree() const;
    /// Coefficient of var^k, as a polynomial in the remaining variables.
    MultiPoly coefficient(std::string_view var, unsigned k) const;
    /// All coefficients in var, index = power.
    std::vector<MultiPoly> coefficients_in(std::string_view var) const;
    MultiPoly leading_coefficient(std::string_view var) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned n) const;
    MultiPoly derivative(std::string_view var) const;

    /// Exact division; throws InexactDivision if the divisor does not divide.
    MultiPoly exact_div(const MultiPoly& divisor) const;
    /// True (and quotient set) when divisor divides *this exactly.
    bool divides_into(const MultiPoly& divisor, MultiPoly* quotient) const;

    MultiPoly evaluate(std::string_view var, const Rational& value) const;
    MultiPoly evaluate(const std::map<std::string, Rational>& values) const;
    double evaluate_double(const std::map<std::string, double>& values) const;
    /// Replaces var by a polynomial.
    MultiPoly substitute(std::string_view var, const MultiPoly& replacement) const;
    /// Renames a variable (the target name must not already occur).
    MultiPoly rename(std::string_view from, const std::string& to) const;

    /// Requires at most one variable, which must be var if present.
    UniPoly to_unipoly(std::string_view var) const;

    /// Canonical text: terms in descending monomial order, explicit exponents
    /// ("x^1"), coefficients as "p/q"; the zero polynomial prints as "0".
    std::string to_string() const;

private:
    void canonicalize();
    MultiPoly embedded(const std::vector<std::string>& vars) const;
    int index_of(std::string_view var) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

}  // namespace contact_sextic
