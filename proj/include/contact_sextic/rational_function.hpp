#pragma once

#include <string>
#include <string_view>

#include "contact_sextic/multipoly.hpp"
#include "contact_sextic/unipoly.hpp"

namespace contact_sextic {

/// Quotient of two polynomials in the curve parameter t, kept reduced:
/// gcd(numerator, denominator) = 1 and the denominator is monic.
class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : RationalFunction(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(UniPoly num) : num_(std::move(num)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
    /// Throws DivisionByZero if den is the zero polynomial.
    RationalFunction(UniPoly num, UniPoly den);

    static RationalFunction t() { return RationalFunction(UniPoly::x()); }
    /// Accepts infix expressions in t, e.g. "-t^3/(t^2+1)^2".
    static RationalFunction parse(std::string_view text);

    const UniPoly& numerator() const { return num_; }
    const UniPoly& denominator() const { return den_; }
    MultiPoly numerator_poly() const { return MultiPoly::from_unipoly(num_, "t"); }
    MultiPoly denominator_poly() const { return MultiPoly::from_unipoly(den_, "t"); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator-() const { return RationalFunction(-num_, den_, Reduced{}); }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(unsigned n) const { return RationalFunction(num_.pow(n), den_.pow(n), Reduced{}); }
    RationalFunction derivative() const;

    /// Throws DivisionByZero at a pole.
    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;

    /// Infix text such as "(t^3 - 3*t)/(3*t^2 + 3)".
    std::string to_string() const;

private:
    struct Reduced {};
    RationalFunction(UniPoly num, UniPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    UniPoly num_;
    UniPoly den_;
};

std::string to_infix(const UniPoly& p, const std::string& var = "t");

}  // namespace contact_sextic
