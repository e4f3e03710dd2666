#include "contact_sextic/rational_function.hpp"

#include "contact_sextic/error.hpp"
#include "expression_parser.hpp"

namespace contact_sextic {

namespace {

bool is_one(const UniPoly& p) { return p.degree() == 0 && p.coeff(0) == 1; }

}  // namespace

RationalFunction::RationalFunction(UniPoly num, UniPoly den) {
    if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
    if (num.is_zero()) {
        den_ = UniPoly(Rational(1));
        return;
    }
    const UniPoly g = gcd(num, den);
    if (!is_one(g)) {
        num = num.exact_div(g);
        den = den.exact_div(g);
    }
    const Rational lead = den.leading();
    if (lead != 1) {
        num *= Rational(1 / lead);
        den *= Rational(1 / lead);
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RationalFunction RationalFunction::parse(std::string_view text) {
    struct Ops {
        RationalFunction identifier(const std::string& name) const {
            if (name != "t") throw Error(ErrorCode::Parse, "rational functions are in t only, got '" + name + "'");
            return RationalFunction::t();
        }
        RationalFunction divide(const RationalFunction& a, const RationalFunction& b) const { return a / b; }
    };
    return detail::ExpressionParser<RationalFunction, Ops>(text, Ops{}).parse();
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    const UniPoly g = gcd(a.den_, b.den_);
    if (is_one(g)) return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_, RationalFunction::Reduced{});
    const UniPoly ad = a.den_.exact_div(g);
    const UniPoly bd = b.den_.exact_div(g);
    UniPoly num = a.num_ * bd + b.num_ * ad;
    if (num.is_zero()) return {};
    const UniPoly h = gcd(num, g);
    UniPoly gh = g;
    if (!is_one(h)) {
        num = num.exact_div(h);
        gh = g.exact_div(h);
    }
    return RationalFunction(std::move(num), ad * bd * gh, RationalFunction::Reduced{});
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const UniPoly g1 = gcd(a.num_, b.den_);
    const UniPoly g2 = gcd(b.num_, a.den_);
    return RationalFunction(a.num_.exact_div(g1) * b.num_.exact_div(g2), a.den_.exact_div(g2) * b.den_.exact_div(g1),
                            RationalFunction::Reduced{});
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero rational function");
    RationalFunction inv(b.den_, b.num_);
    return a * inv;
}

RationalFunction RationalFunction::derivative() const {
    if (den_.is_constant()) return RationalFunction(num_.derivative() * Rational(1 / den_.leading()));
    const UniPoly dd = den_.derivative();
    const UniPoly g = gcd(den_, dd);
    const UniPoly reduced_den = den_.exact_div(g);
    UniPoly num = num_.derivative() * reduced_den - num_ * dd.exact_div(g);
    return RationalFunction(std::move(num), den_ * reduced_den);
}

Rational RationalFunction::evaluate(const Rational& t) const {
    const Rational d = den_.evaluate(t);
    if (d == 0) throw Error(ErrorCode::DivisionByZero, "rational function evaluated at a pole");
    return num_.evaluate(t) / d;
}

double RationalFunction::evaluate(double t) const { return num_.evaluate(t) / den_.evaluate(t); }

std::string to_infix(const UniPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const Rational mag = abs(c);
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty())
            out += to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += to_string(mag) + "*" + mono;
    }
    return out;
}

std::string RationalFunction::to_string() const {
    if (is_one(den_)) return num_.is_constant() ? to_infix(num_) : "(" + to_infix(num_) + ")";
    return "(" + to_infix(num_) + ")/(" + to_infix(den_) + ")";
}

}  // namespace contact_sextic
