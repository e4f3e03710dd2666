#include "contact_sextic/numeric.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <unsupported/Eigen/AutoDiff>

#include "contact_sextic/algebra.hpp"
#include "contact_sextic/error.hpp"
#include "contact_sextic/polyroots.hpp"
#include "contact_sextic/series.hpp"

namespace contact_sextic {

double ode_expression(double y3, double y4, double y5, double y6, double y7) {
    return 10 * y3 * y3 * y3 * y7 - 70 * y3 * y3 * y4 * y6 - 49 * y3 * y3 * y5 * y5 + 280 * y3 * y4 * y4 * y5 -
           175 * y4 * y4 * y4 * y4;
}

namespace {

double y7_from(double y3, double y4, double y5, double y6) {
    return (70 * y3 * y3 * y4 * y6 + 49 * y3 * y3 * y5 * y5 - 280 * y3 * y4 * y4 * y5 + 175 * y4 * y4 * y4 * y4) /
           (10 * y3 * y3 * y3);
}

}  // namespace

double y7_from_jet(const NumericJet& jet, double eps_sing) {
    if (jet.y.size() < 7) throw Error(ErrorCode::InvalidArgument, "jet needs y through y^(6)");
    if (!(std::abs(jet.y[3]) >= eps_sing)) throw Error(ErrorCode::SingularJet, "|y'''| below the singularity guard");
    return y7_from(jet.y[3], jet.y[4], jet.y[5], jet.y[6]);
}

namespace {

using State = std::array<double, 7>;

// Dormand-Prince 5(4) tableau.
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

struct Rhs {
    double eps;
    // False when the state is within the singularity guard.
    bool operator()(const State& u, State& out) const {
        if (!(std::abs(u[3]) >= eps)) return false;
        for (int i = 0; i < 6; ++i) out[i] = u[i + 1];
        out[6] = y7_from(u[3], u[4], u[5], u[6]);
        return std::isfinite(out[6]);
    }
};

State combine(const State& u, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State out = u;
    for (const auto& [w, k] : terms)
        if (w != 0.0)
            for (int i = 0; i < 7; ++i) out[i] += h * w * (*k)[i];
    return out;
}

struct StepResult {
    bool ok = false;
    State next{};
    State k7{};
    double err = 0.0;
};

StepResult dopri_step(const Rhs& f, const State& u, const State& k1, double h, const IntegratorConfig& cfg) {
    StepResult r;
    State k2, k3, k4, k5, k6;
    if (!f(combine(u, h, {{a21, &k1}}), k2)) return r;
    if (!f(combine(u, h, {{a31, &k1}, {a32, &k2}}), k3)) return r;
    if (!f(combine(u, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}), k4)) return r;
    if (!f(combine(u, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}), k5)) return r;
    if (!f(combine(u, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}), k6)) return r;
    r.next = combine(u, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    if (!f(r.next, r.k7)) return r;
    double sum = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * r.k7[i]);
        const double sc = cfg.atol + cfg.rtol * std::max(std::abs(u[i]), std::abs(r.next[i]));
        sum += (e / sc) * (e / sc);
    }
    r.err = std::sqrt(sum / 7);
    r.ok = std::isfinite(r.err);
    return r;
}

double initial_step(const Rhs& f, const State& u, const State& k1, double span, const IntegratorConfig& cfg) {
    // Hairer, Norsett, Wanner, II.4: balance the first two derivatives.
    double d0 = 0, d1 = 0;
    for (int i = 0; i < 7; ++i) {
        const double sc = cfg.atol + cfg.rtol * std::abs(u[i]);
        d0 += (u[i] / sc) * (u[i] / sc);
        d1 += (k1[i] / sc) * (k1[i] / sc);
    }
    d0 = std::sqrt(d0 / 7);
    d1 = std::sqrt(d1 / 7);
    double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h0 = std::min(h0, span);
    State k2;
    if (!f(combine(u, h0, {{1.0, &k1}}), k2)) return h0 * 1e-3;
    double d2 = 0;
    for (int i = 0; i < 7; ++i) {
        const double sc = cfg.atol + cfg.rtol * std::abs(u[i]);
        d2 += ((k2[i] - k1[i]) / sc) * ((k2[i] - k1[i]) / sc);
    }
    d2 = std::sqrt(d2 / 7) / h0;
    const double dm = std::max(d1, d2);
    const double h1 = dm <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dm, 1.0 / 5);
    return std::min({100 * h0, h1, span});
}

}  // namespace

Trajectory integrate(const NumericJet& start, double x_end, const IntegratorConfig& cfg) {
    if (start.y.size() < 7) throw Error(ErrorCode::InvalidArgument, "start jet needs y through y^(6)");
    if (!(cfg.rtol > 0 && cfg.atol > 0 && cfg.eps_sing > 0))
        throw Error(ErrorCode::InvalidArgument, "tolerances and the singularity guard must be positive");
    if (!(std::abs(start.y[3]) >= cfg.eps_sing))
        throw Error(ErrorCode::SingularJet, "|y'''| below the singularity guard at the start");

    const Rhs f{cfg.eps_sing};
    State u;
    std::copy_n(start.y.begin(), 7, u.begin());
    double x = start.x0;
    Trajectory out;
    out.samples.push_back({x, u});
    const double span = std::abs(x_end - x);
    if (span == 0.0) return out;
    const double dir = x_end > x ? 1.0 : -1.0;

    State k1;
    f(u, k1);
    double h = cfg.fixed_step > 0 ? cfg.fixed_step
               : cfg.initial_step > 0 ? cfg.initial_step
                                      : initial_step(f, u, k1, span, cfg);
    constexpr double beta = 0.04;
    constexpr double expo = 0.2 - 0.75 * beta;
    double err_old = 1e-4;
    long steps = 0;

    while (dir * (x_end - x) > 0) {
        if (++steps > cfg.max_steps) throw Error(ErrorCode::StepLimitExceeded, "step limit exceeded");
        const double remaining = std::abs(x_end - x);
        const bool last = h >= remaining * (1 - 1e-12);
        const double step = last ? remaining : h;
        const StepResult r = dopri_step(f, u, k1, dir * step, cfg);
        if (!r.ok) {
            // A stage crossed the guard: shrink towards the singular point.
            ++out.rejected;
            h = step / 2;
            if (h <= 1e-13 * std::max(1.0, std::abs(x))) {
                out.status = IntegrationStatus::SingularityApproached;
                return out;
            }
            continue;
        }
        if (cfg.fixed_step > 0 || r.err <= 1.0) {
            x = last ? x_end : x + dir * step;
            u = r.next;
            k1 = r.k7;
            ++out.accepted;
            out.samples.push_back({x, u});
            if (cfg.fixed_step > 0) continue;
            const double fac = std::clamp(std::pow(r.err, expo) / std::pow(err_old, beta) / 0.9, 0.2, 10.0);
            err_old = std::max(r.err, 1e-4);
            h = step / fac;
        } else {
            ++out.rejected;
            h = step / std::min(10.0, std::pow(r.err, expo) / 0.9);
        }
    }
    return out;
}

MultiPoly linearization_residual(const ContactHamiltonian& H, const ParametricCurve& solution) {
    const auto jets = jet_from_parametric(solution, 7);
    const RationalFunction xdot = solution.x().derivative();
    const RationalFunction inv = RationalFunction(1) / xdot;
    RationalFunction v = evaluate_rational(H.H, {{"x", solution.x()}, {"y", solution.y()}, {"z", jets[0]}});
    std::vector<RationalFunction> dv{v};
    for (int k = 1; k <= 7; ++k) dv.push_back(dv.back().derivative() * inv);
    Bindings at;
    for (int k = 1; k <= 7; ++k) at["y" + std::to_string(k)] = jets[k - 1];
    const MultiPoly& F = seventh_order_polynomial();
    RationalFunction sum;
    for (int k = 3; k <= 7; ++k) {
        const std::string name = "y" + std::to_string(k);
        sum += evaluate_rational(F.derivative(name), at) * dv[k];
    }
    return sum.numerator_poly();
}

std::vector<std::complex<double>> complex_roots(const MultiPoly& f) {
    if (f.variables().size() != 1) throw Error(ErrorCode::InvalidArgument, "complex_roots needs a univariate polynomial");
    const std::string var = f.variables()[0];
    std::vector<std::complex<double>> out;
    for (const auto& part : square_free_decomposition(f).parts) {
        const auto d = part.factor.to_unipoly(var).to_doubles();
        for (auto r : aberth_roots(std::span<const double>(d))) {
            if (std::abs(r.real()) <= 1e-14 * std::abs(r)) r.real(0.0);
            for (unsigned m = 0; m < part.multiplicity; ++m) out.push_back(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

ParamVector to_param_vector(const GeneralSolutionParams& p) {
    ParamVector out{};
    const auto a = p.to_array();
    for (int i = 0; i < 7; ++i) out[i] = to_double(a[i]);
    return out;
}

double scaled_residual_norm(const ParamVector& residuals, const NumericJet& data) {
    double worst = 0.0;
    for (int k = 0; k < 7; ++k) worst = std::max(worst, std::abs(residuals[k]) / (1 + std::abs(data.y[k])));
    return worst;
}

namespace {

// The sextic is G = Y^3 + A Y + B with Y = c4 y + K(x); A, B, K as series
// in (x - x0). Working in Y keeps the higher Taylor coefficients free of the
// cancellation between c4 y and K.
template <class T>
struct CubicSeries {
    Series<T> A, B, K;
};

template <class T>
CubicSeries<T> cubic_series(const std::array<T, 7>& c, double x0, std::size_t n) {
    Series<T> xs(n, T(x0));
    if (n > 1) xs.c[1] = T(1);
    const Series<T> one(n, T(1));
    const Series<T> S = xs * c[4] + Series<T>(n, c[5]);
    const Series<T> W = one - xs * c[6];
    const Series<T> S2 = S * S, W2 = W * W;
    const Series<T> S4 = S2 * S2, W4 = W2 * W2;
    return {(S4 * T(9) - S2 * W2 * T(18) - W4 * T(3)), S * (S4 * W * T(36) + W4 * W * T(12)),
            Series<T>(n, c[0]) + xs * c[1] + (xs * xs) * c[2]};
}

template <class T>
T cubic_value(const T& A, const T& B, const T& Y) {
    return Y * Y * Y + A * Y + B;
}

template <class T>
T cubic_slope(const T& A, const T& Y) {
    return T(3) * Y * Y + A;
}

// Taylor coefficients Y_0..Y_6 of the root through Y0.
template <class T>
std::array<T, 7> cubic_taylor(const CubicSeries<T>& cs, const T& Y0) {
    const T gy = cubic_slope(cs.A.c[0], Y0);
    Series<T> Y(7, Y0);
    for (std::size_t k = 1; k < 7; ++k) {
        const Series<T> g = Y * Y * Y + cs.A * Y + cs.B;
        Y.c[k] = -g.c[k] / gy;
    }
    std::array<T, 7> out;
    for (int k = 0; k < 7; ++k) out[k] = Y.c[k];
    return out;
}

constexpr std::array<double, 7> kFactorial{1, 1, 2, 6, 24, 120, 720};

struct Branch {
    double Y0;
    double K0;
};

Branch select_branch(const ParamVector& c, double x0, double y_hint) {
    if (c[3] == 0.0 || !std::isfinite(c[3])) throw Error(ErrorCode::BranchSelectionFailure, "c4 = 0");
    const CubicSeries<double> cs = cubic_series<double>(c, x0, 1);
    const double A = cs.A.c[0], B = cs.B.c[0], K = cs.K.c[0];
    const std::array<double, 4> cubic{B, A, 0.0, 1.0};
    const auto roots = aberth_roots(std::span<const double>(cubic));
    const double scale = 1 + std::abs(A) + std::abs(B);
    double best = std::numeric_limits<double>::infinity(), best_fy = 0;
    bool found = false;
    double chosen = 0;
    for (const auto& r : roots) {
        if (std::abs(r.imag()) > 1e-7 * std::cbrt(scale)) continue;
        double Y = r.real();
        for (int i = 0; i < 3; ++i) {
            const double gy = cubic_slope(A, Y);
            if (gy == 0.0) break;
            Y -= cubic_value(A, B, Y) / gy;
        }
        const double dist = std::abs((Y - K) / c[3] - y_hint);
        // |F_y| = |c4 G_Y|.
        const double fy = std::abs(c[3] * cubic_slope(A, Y));
        if (!found || dist < best - 1e-12 * (1 + best) || (std::abs(dist - best) <= 1e-12 * (1 + best) && fy > best_fy)) {
            best = dist;
            best_fy = fy;
            chosen = Y;
            found = true;
        }
    }
    if (!found || !std::isfinite(chosen)) throw Error(ErrorCode::BranchSelectionFailure, "no real root at x0");
    return {chosen, K};
}

ParamVector jet_from_taylor(const std::array<double, 7>& a) {
    ParamVector out{};
    for (int k = 0; k < 7; ++k) out[k] = a[k] * kFactorial[k];
    return out;
}

}  // namespace

ParamVector predicted_jet(const ParamVector& c, double x0, double y_hint) {
    const Branch b = select_branch(c, x0, y_hint);
    const CubicSeries<double> cs = cubic_series<double>(c, x0, 7);
    const auto Y = cubic_taylor(cs, b.Y0);
    std::array<double, 7> a;
    for (int k = 0; k < 7; ++k) a[k] = (Y[k] - cs.K.c[k]) / c[3];
    // y itself from the selected root rather than the series constant.
    a[0] = (b.Y0 - b.K0) / c[3];
    return jet_from_taylor(a);
}

std::array<ParamVector, 7> jacobian_finite_difference(const ParamVector& c, double x0, double y_hint) {
    std::array<ParamVector, 7> J{};
    for (int j = 0; j < 7; ++j) {
        const double h = 1e-6 * (1 + std::abs(c[j]));
        ParamVector plus = c, minus = c;
        plus[j] += h;
        minus[j] -= h;
        const ParamVector fp = predicted_jet(plus, x0, y_hint);
        const ParamVector fm = predicted_jet(minus, x0, y_hint);
        for (int k = 0; k < 7; ++k) J[k][j] = (fp[k] - fm[k]) / (2 * h);
    }
    return J;
}

std::array<ParamVector, 7> jacobian_automatic(const ParamVector& c, double x0, double y_hint) {
    using Grad = Eigen::Matrix<double, 7, 1>;
    using AD = Eigen::AutoDiffScalar<Grad>;
    std::array<AD, 7> cd;
    for (int j = 0; j < 7; ++j) cd[j] = AD(c[j], 7, j);
    const Branch b = select_branch(c, x0, y_hint);
    const CubicSeries<AD> cs = cubic_series<AD>(cd, x0, 7);
    // One Newton step in dual arithmetic carries dY0/dc = -G_c / G_Y.
    const AD Y0(b.Y0, Grad::Zero());
    const AD Y0d = Y0 - cubic_value(cs.A.c[0], cs.B.c[0], Y0) / cubic_slope(cs.A.c[0], Y0);
    const auto Y = cubic_taylor(cs, Y0d);
    std::array<ParamVector, 7> J{};
    for (int k = 0; k < 7; ++k) {
        const AD a = (Y[k] - cs.K.c[k]) / cd[3];
        for (int j = 0; j < 7; ++j) J[k][j] = a.derivatives()[j] * kFactorial[k];
    }
    return J;
}

FitResult fit_parameters(const NumericJet& data, const FitConfig& cfg) {
    if (data.y.size() < 7) throw Error(ErrorCode::InvalidArgument, "fit data needs y through y^(6)");
    if (!(cfg.tolerance > 0) || !(cfg.damping > 0 && cfg.damping <= 1))
        throw Error(ErrorCode::InvalidArgument, "invalid fit configuration");
    const double x0 = data.x0, y_hint = data.y[0];
    auto residuals = [&](const ParamVector& c) {
        const ParamVector p = predicted_jet(c, x0, y_hint);
        ParamVector r{};
        for (int k = 0; k < 7; ++k) r[k] = p[k] - data.y[k];
        return r;
    };
    FitResult out;
    out.c = cfg.initial_guess;
    out.residuals = residuals(out.c);
    out.residual_norm = scaled_residual_norm(out.residuals, data);
    for (int it = 0; it <= cfg.max_iterations; ++it) {
        out.iterations = it;
        if (out.residual_norm < cfg.tolerance) return out;
        if (it == cfg.max_iterations) break;
        const auto J = jacobian_finite_difference(out.c, x0, y_hint);
        Eigen::Matrix<double, 7, 7> M;
        Eigen::Matrix<double, 7, 1> rhs;
        for (int k = 0; k < 7; ++k) {
            // Rows scaled like the residual norm.
            const double w = 1 / (1 + std::abs(data.y[k]));
            for (int j = 0; j < 7; ++j) M(k, j) = J[k][j] * w;
            rhs(k) = -out.residuals[k] * w;
        }
        const Eigen::FullPivLU<Eigen::Matrix<double, 7, 7>> lu(M);
        if (lu.rank() < 7 || lu.rcond() < 1e-15)
            throw Error(ErrorCode::SingularJacobian, "fit Jacobian is singular");
        const Eigen::Matrix<double, 7, 1> delta = lu.solve(rhs);
        double alpha = cfg.damping;
        bool improved = false;
        for (int halving = 0; halving < 40; ++halving, alpha /= 2) {
            ParamVector trial = out.c;
            for (int j = 0; j < 7; ++j) trial[j] += alpha * delta(j);
            ParamVector r;
            try {
                r = residuals(trial);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::BranchSelectionFailure) throw;
                continue;
            }
            const double norm = scaled_residual_norm(r, data);
            if (norm < out.residual_norm) {
                out.c = trial;
                out.residuals = r;
                out.residual_norm = norm;
                improved = true;
                break;
            }
        }
        if (!improved) break;  // rounding floor reached
    }
    if (out.residual_norm < cfg.tolerance) return out;
    throw Error(ErrorCode::MaxIterations, "fit did not reach the tolerance; scaled residual " +
                                              std::to_string(out.residual_norm));
}

}  // namespace contact_sextic
