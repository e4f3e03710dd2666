#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "contact_sextic/rational.hpp"

namespace contact_sextic {

/// Dense univariate polynomial over Q, coefficients stored from the constant
/// term upwards. Trailing zeros are always trimmed, so the zero polynomial has
/// no coefficients and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    UniPoly(long c) : UniPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static UniPoly monomial(const Rational& c, unsigned degree);
    static UniPoly x() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational coeff(unsigned k) const;
    Rational leading() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

    UniPoly pow(unsigned n) const;
    UniPoly derivative() const;
    UniPoly monic() const;

    // Euclidean division; throws DivisionByZero on a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;
    // Throws InexactDivision when the remainder is nonzero.
    UniPoly exact_div(const UniPoly& divisor) const;

    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;
    std::complex<double> evaluate(std::complex<double> t) const;

    std::vector<double> to_doubles() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) is 0. Uses a primitive pseudo-remainder sequence over
/// the integers to keep coefficient growth in check.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// Number of distinct real roots, by a Sturm sequence. Exact.
unsigned count_real_roots(const UniPoly& p);

/// Rational roots via the rational root theorem on the primitive integer form.
/// Each distinct root is reported once.
std::vector<Rational> rational_roots(const UniPoly& p);

}  // namespace contact_sextic
