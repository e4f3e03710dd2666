#include "contact_sextic/curves.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "contact_sextic/algebra.hpp"
#include "contact_sextic/error.hpp"
#include "contact_sextic/polyroots.hpp"
#include "contact_sextic/series.hpp"

namespace contact_sextic {

NumericJet to_numeric(const ExactJet& jet) {
    NumericJet out;
    out.x0 = to_double(jet.x0);
    for (const auto& v : jet.y) out.y.push_back(to_double(v));
    return out;
}

std::vector<RationalFunction> jet_from_parametric(const ParametricCurve& curve, unsigned order) {
    const RationalFunction xdot = curve.x().derivative();
    if (xdot.is_zero()) throw Error(ErrorCode::VerticalCurve, "x'(t) vanishes identically");
    const RationalFunction inv = RationalFunction(1) / xdot;
    std::vector<RationalFunction> out;
    RationalFunction cur = curve.y();
    for (unsigned k = 1; k <= order; ++k) {
        cur = cur.derivative() * inv;
        out.push_back(cur);
    }
    return out;
}

const MultiPoly& seventh_order_polynomial() {
    static const MultiPoly f = MultiPoly::parse(
        "10*y3^3*y7 - 70*y3^2*y4*y6 - 49*y3^2*y5^2 + 280*y3*y4^2*y5 - 175*y4^4");
    return f;
}

const MultiPoly& halphen_polynomial() {
    static const MultiPoly f = MultiPoly::parse("9*y2^2*y5 - 45*y2*y3*y4 + 40*y3^3");
    return f;
}

namespace {

MultiPoly jet_residual(const ParametricCurve& curve, const MultiPoly& f, unsigned order) {
    const auto jets = jet_from_parametric(curve, order);
    Bindings b;
    for (unsigned k = 1; k <= order; ++k) b["y" + std::to_string(k)] = jets[k - 1];
    return substitute_rational(f, b);
}

}  // namespace

MultiPoly ode_residual(const ParametricCurve& curve) { return jet_residual(curve, seventh_order_polynomial(), 7); }

Verification verify_solution(const ParametricCurve& curve) {
    Verification v;
    v.residual = ode_residual(curve);
    v.solves = v.residual.is_zero();
    return v;
}

MultiPoly halphen_residual(const ParametricCurve& curve) { return jet_residual(curve, halphen_polynomial(), 5); }

ExactJet implicit_jet(const ImplicitCurve& curve, const Rational& x0, const Rational& y0, unsigned order) {
    const MultiPoly& f = curve.polynomial();
    auto F = [&](const Series<Rational>& xs, const Series<Rational>& ys) {
        return evaluate_on_series(f, xs, ys, [](const Rational& c) { return c; });
    };
    const auto a = implicit_taylor<Rational>(F, x0, y0, order, Rational(0));
    ExactJet jet;
    jet.x0 = x0;
    for (unsigned k = 0; k <= order; ++k) jet.y.push_back(a[k] * factorial(k));
    return jet;
}

namespace {

using C = std::complex<double>;

// Value and a magnitude scale (sum of |term|) of f at a complex point.
std::pair<C, double> eval_complex(const MultiPoly& f, C x, C y) {
    const auto& vars = f.variables();
    C acc = 0.0;
    double scale = 0.0;
    for (const auto& [e, c] : f.terms()) {
        C term = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            term *= std::pow(vars[i] == "x" ? x : y, static_cast<int>(e[i]));
        }
        acc += term;
        scale += std::abs(term);
    }
    return {acc, scale};
}

bool vanishes_numerically(const MultiPoly& f, C x, C y, double tol) {
    if (f.is_zero()) return true;
    const auto [v, s] = eval_complex(f, x, y);
    return std::abs(v) <= tol * std::max(1.0, s);
}

unsigned numeric_multiplicity(const MultiPoly& f, C x, C y, double tol) {
    std::vector<MultiPoly> layer{f};
    for (unsigned k = 0; k < 64; ++k) {
        for (const auto& p : layer)
            if (!vanishes_numerically(p, x, y, tol)) return k;
        std::vector<MultiPoly> next;
        next.push_back(layer.front().derivative("x"));
        for (const auto& p : layer) next.push_back(p.derivative("y"));
        layer = std::move(next);
    }
    return 64;
}

UniPoly in_y_at(const MultiPoly& f, const Rational& x0) { return f.evaluate("x", x0).to_unipoly("y"); }

std::vector<C> complex_roots_of(const UniPoly& p) {
    if (p.degree() < 1) return {};
    const auto d = p.to_doubles();
    std::vector<C> c(d.begin(), d.end());
    return aberth_roots(std::span<const C>(c));
}

std::vector<C> complex_roots_of(const std::vector<C>& coeffs) {
    std::vector<C> c = coeffs;
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() < 2) return {};
    return aberth_roots(std::span<const C>(c));
}

constexpr double kTolerance = 1e-8;

}  // namespace

unsigned multiplicity_at(const MultiPoly& f, const Rational& x0, const Rational& y0) {
    std::map<std::string, Rational> at{{"x", x0}, {"y", y0}};
    std::vector<MultiPoly> layer{f};
    for (unsigned k = 0;; ++k) {
        bool all_zero = true;
        for (const auto& p : layer)
            if (!p.evaluate(at).is_zero()) all_zero = false;
        if (!all_zero) return k;
        if (std::all_of(layer.begin(), layer.end(), [](const MultiPoly& p) { return p.is_zero(); }))
            throw Error(ErrorCode::ZeroPolynomial, "multiplicity of the zero polynomial");
        std::vector<MultiPoly> next;
        next.push_back(layer.front().derivative("x"));
        for (const auto& p : layer) next.push_back(p.derivative("y"));
        layer = std::move(next);
    }
}

std::vector<SingularPoint> singular_points(const ImplicitCurve& curve) {
    const MultiPoly& f = curve.polynomial();
    const MultiPoly fx = f.derivative("x");
    const MultiPoly fy = f.derivative("y");
    const auto dimensional = [] {
        return Error(ErrorCode::NonZeroDimensional, "f, f_x, f_y share a curve component");
    };

    if (f.degree("y") == 0) {
        // A union of vertical lines: singular exactly where f has a repeated root.
        const UniPoly p = f.to_unipoly("x");
        if (gcd(p, p.derivative()).degree() > 0) throw dimensional();
        return {};
    }

    UniPoly eliminant;
    bool have = false;
    for (const MultiPoly* g : {&fx, &fy}) {
        if (g->is_zero()) continue;
        const MultiPoly e = g->degree("y") == 0 ? *g : resultant(f, *g, "y");
        if (e.is_zero()) continue;
        const UniPoly eu = e.to_unipoly("x");
        eliminant = have ? gcd(eliminant, eu) : eu;
        have = true;
    }
    if (!have) throw dimensional();
    if (eliminant.degree() < 1) return {};

    UniPoly rest = eliminant.exact_div(gcd(eliminant, eliminant.derivative()));
    std::vector<SingularPoint> out;

    for (const Rational& x0 : rational_roots(rest)) {
        rest = rest.exact_div(UniPoly(std::vector<Rational>{-x0, Rational(1)}));
        UniPoly h;
        bool any = false;
        for (const MultiPoly* g : {&f, &fx, &fy}) {
            const UniPoly gy = in_y_at(*g, x0);
            if (gy.is_zero()) continue;
            h = any ? gcd(h, gy) : gy.monic();
            any = true;
        }
        if (!any) throw dimensional();
        if (h.degree() < 1) continue;
        h = h.exact_div(gcd(h, h.derivative()));
        for (const Rational& y0 : rational_roots(h)) {
            h = h.exact_div(UniPoly(std::vector<Rational>{-y0, Rational(1)}));
            SingularPoint p;
            p.x_exact = x0;
            p.y_exact = y0;
            p.x = to_double(x0);
            p.y = to_double(y0);
            p.multiplicity = multiplicity_at(f, x0, y0);
            out.push_back(p);
        }
        for (const C& y : complex_roots_of(h)) {
            SingularPoint p;
            p.x_exact = x0;
            p.x = to_double(x0);
            p.y = y;
            p.multiplicity = numeric_multiplicity(f, p.x, y, kTolerance);
            out.push_back(p);
        }
    }

    // Irrational abscissae: candidates y from f_y (or f) on the vertical line.
    const MultiPoly& probe = fy.degree("y") > 0 ? fy : f;
    for (const C& x : complex_roots_of(rest)) {
        const auto coeffs = probe.coefficients_in("y");
        std::vector<C> cy;
        for (const auto& c : coeffs) cy.push_back(eval_complex(c, x, 0.0).first);
        std::vector<SingularPoint> found;
        for (const C& y : complex_roots_of(cy)) {
            if (!vanishes_numerically(f, x, y, kTolerance) || !vanishes_numerically(fx, x, y, kTolerance) ||
                !vanishes_numerically(fy, x, y, kTolerance))
                continue;
            const bool duplicate = std::any_of(found.begin(), found.end(), [&](const SingularPoint& q) {
                return std::abs(q.y - y) <= 1e-6 * std::max(1.0, std::abs(y));
            });
            if (duplicate) continue;
            SingularPoint p;
            p.x = x;
            p.y = y;
            p.multiplicity = numeric_multiplicity(f, x, y, kTolerance);
            found.push_back(p);
        }
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

namespace {

// Keeps every term c x^i y^j of f as c * u^a v^b with (a, b) chosen by pick.
template <class Pick>
ImplicitCurve chart(const ImplicitCurve& curve, Pick pick) {
    const MultiPoly& f = curve.polynomial();
    const unsigned d = f.total_degree();
    const auto& vars = f.variables();
    MultiPoly out;
    const MultiPoly x = MultiPoly::variable("x");
    const MultiPoly y = MultiPoly::variable("y");
    for (const auto& [e, c] : f.terms()) {
        unsigned i = 0, j = 0;
        for (std::size_t k = 0; k < e.size(); ++k) (vars[k] == "x" ? i : j) = e[k];
        const unsigned w = d - i - j;
        const auto [a, b] = pick(i, j, w);
        out += x.pow(a) * y.pow(b) * MultiPoly(c);
    }
    return ImplicitCurve(out);
}

}  // namespace

ImplicitCurve chart_at_infinity_x(const ImplicitCurve& curve) {
    return chart(curve, [](unsigned, unsigned j, unsigned w) { return std::pair{j, w}; });
}

ImplicitCurve chart_at_infinity_y(const ImplicitCurve& curve) {
    return chart(curve, [](unsigned i, unsigned, unsigned w) { return std::pair{i, w}; });
}

long arithmetic_genus(long degree, const std::vector<long>& deltas) {
    if (degree < 1) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
    long g = (degree - 1) * (degree - 2) / 2;
    for (long d : deltas) {
        if (d < 0) throw Error(ErrorCode::InvalidArgument, "delta invariants are nonnegative");
        g -= d;
    }
    return g;
}

namespace {

constexpr std::array<long, 7> kBinomial6{1, 6, 15, 20, 15, 6, 1};

}  // namespace

SexticForm SexticForm::from_polynomial(const MultiPoly& p) {
    if (!p.is_zero() && !p.is_constant() && (p.variables().size() != 1 || p.variables()[0] != "x"))
        throw Error(ErrorCode::InvalidArgument, "binary sextic must be a polynomial in x");
    const UniPoly u = p.is_constant() ? UniPoly(p.is_zero() ? Rational(0) : p.constant_value()) : p.to_unipoly("x");
    if (u.degree() > 6) throw Error(ErrorCode::InvalidArgument, "degree exceeds 6");
    SexticForm s;
    for (unsigned k = 0; k < 7; ++k) s.a[k] = u.coeff(6 - k) / kBinomial6[k];
    return s;
}

MultiPoly SexticForm::to_polynomial() const {
    std::vector<Rational> c(7);
    for (unsigned k = 0; k < 7; ++k) c[6 - k] = a[k] * kBinomial6[k];
    return MultiPoly::from_unipoly(UniPoly(std::move(c)), "x");
}

SexticForm SexticForm::mobius(const Rational& ma, const Rational& mb, const Rational& mc, const Rational& md) const {
    const UniPoly num(std::vector<Rational>{mb, ma});
    const UniPoly den(std::vector<Rational>{md, mc});
    UniPoly acc;
    for (unsigned j = 0; j <= 6; ++j) {
        const Rational cj = a[6 - j] * kBinomial6[6 - j];
        if (cj == 0) continue;
        acc += num.pow(j) * den.pow(6 - j) * cj;
    }
    return from_polynomial(MultiPoly::from_unipoly(acc, "x"));
}

Rational quadratic_invariant(const SexticForm& s) {
    const auto& a = s.a;
    return a[0] * a[6] - 6 * a[1] * a[5] + 15 * a[2] * a[4] - 10 * a[3] * a[3];
}

Complex cross_ratio(Complex z1, Complex z2, Complex z3, Complex z4) {
    auto homogeneous = [](Complex z) { return is_infinite(z) ? std::pair<Complex, Complex>{1.0, 0.0} : std::pair<Complex, Complex>{z, 1.0}; };
    const std::array<std::pair<Complex, Complex>, 4> p{homogeneous(z1), homogeneous(z2), homogeneous(z3), homogeneous(z4)};
    auto bracket = [&](int i, int j) { return p[i].first * p[j].second - p[j].first * p[i].second; };
    const Complex den = bracket(1, 2) * bracket(0, 3);
    const Complex num = bracket(0, 2) * bracket(1, 3);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (std::abs(bracket(i, j)) == 0.0) throw Error(ErrorCode::CoincidentPoints, "cross-ratio of coincident points");
    return num / den;
}

EquianharmonicCheck equianharmonic_check(const std::array<Complex, 4>& roots, double tolerance) {
    EquianharmonicCheck out;
    out.cross_ratio = cross_ratio(roots[0], roots[1], roots[2], roots[3]);
    const Complex omega = std::polar(1.0, std::numbers::pi / 3);
    out.distance = std::min(std::abs(out.cross_ratio - omega), std::abs(out.cross_ratio - std::conj(omega)));
    out.equianharmonic = out.distance <= tolerance;
    return out;
}

std::optional<MultiPoly> discriminant_is_cube(const ImplicitCurve& curve) {
    const MultiPoly& f = curve.polynomial();
    if (f.degree("y") != 3) throw Error(ErrorCode::InvalidArgument, "curve must have degree 3 in y");
    const MultiPoly disc = discriminant_wrt(f, "y");
    if (disc.is_zero() || disc.is_constant()) return std::nullopt;
    const auto parts = square_free_decomposition(disc).parts;
    if (parts.size() != 1 || parts[0].multiplicity != 3 || parts[0].factor.degree("x") != 4) return std::nullopt;
    return parts[0].factor;
}

}  // namespace contact_sextic
