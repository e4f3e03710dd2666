#include <doctest.h>

#include <cmath>
#include <random>

#include "contact_sextic/curves.hpp"
#include "contact_sextic/error.hpp"
#include "contact_sextic/families.hpp"
#include "contact_sextic/numeric.hpp"
#include "fit_data.hpp"
#include "test_support.hpp"

using namespace contact_sextic;
using contact_sextic::testing::P;
using contact_sextic::testing::general_data;
using contact_sextic::testing::random_params;
using contact_sextic::testing::random_rational;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::InvalidArgument;
}

NumericJet jet(double x0, std::vector<double> y) { return {x0, std::move(y)}; }

NumericJet canform_jet() { return to_numeric(implicit_jet(canonical_curve().implicit, 0, 0, 6)); }

// Oracle: follow the root of the canonical cubic in y from (0, 0) to x by
// small Newton continuation steps.
double canform_branch(double x_end) {
    const MultiPoly f = canonical_curve().implicit.polynomial();
    const MultiPoly fx = f.derivative("x");
    const MultiPoly fy = f.derivative("y");
    double x = 0, y = 0;
    const int n = 3000;
    const double h = x_end / n;
    for (int i = 0; i < n; ++i) {
        // Predictor along the tangent, then Newton in y.
        const double slope = -fx.evaluate_double({{"x", x}, {"y", y}}) /
                             fy.evaluate_double({{"x", x}, {"y", y}});
        x += h;
        y += h * slope;
        for (int k = 0; k < 6; ++k) y -= f.evaluate_double({{"x", x}, {"y", y}}) / fy.evaluate_double({{"x", x}, {"y", y}});
    }
    return y;
}

// Forward point map on a single point.
std::pair<double, double> map_point(const PointTransformationParams& q, double x, double y) {
    const double x1 = to_double(q.c5) * x + to_double(q.c6);
    const double d = 1 + to_double(q.c7) * x1;
    const double X = x1 / d;
    const double Y = to_double(q.c4) * y / (d * d) + to_double(q.c1) + to_double(q.c2) * X + to_double(q.c3) * X * X;
    return {X, Y};
}

}  // namespace

TEST_CASE("y7 from a jet") {
    CHECK(y7_from_jet(jet(0, {0, 0, 0, 1, 0, 0, 0})) == 0.0);
    CHECK(y7_from_jet(jet(0, {0, 0, 0, 1, 1, 0, 0})) == doctest::Approx(17.5).epsilon(1e-15));
    CHECK(ode_expression(1, 1, 0, 0, 17.5) == doctest::Approx(0.0));
    CHECK(code_of([] { y7_from_jet(jet(0, {0, 0, 0, 0, 1, 0, 0})); }) == ErrorCode::SingularJet);
    CHECK(code_of([] { y7_from_jet(jet(0, {0, 0, 0, 1})); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("back-substitution of y7") {
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> u(-3, 3);
    for (int i = 0; i < 200; ++i) {
        const double y3 = u(rng), y4 = u(rng), y5 = u(rng), y6 = u(rng);
        if (std::abs(y3) < 1e-3) continue;
        const double y7 = y7_from_jet(jet(0, {0, 0, 0, y3, y4, y5, y6}));
        const double scale = std::abs(10 * y3 * y3 * y3 * y7) + std::abs(70 * y3 * y3 * y4 * y6) +
                             std::abs(49 * y3 * y3 * y5 * y5) + std::abs(280 * y3 * y4 * y4 * y5) +
                             std::abs(175 * std::pow(y4, 4));
        CHECK(std::abs(ode_expression(y3, y4, y5, y6, y7)) <= 1e-10 * scale);
    }
}

TEST_CASE("integrating the cubic") {
    const Trajectory tr = integrate(jet(0, {0, 0, 0, 6, 0, 0, 0}), 2.0);
    CHECK(tr.status == IntegrationStatus::Completed);
    CHECK(tr.samples.back().x == 2.0);
    CHECK(std::abs(tr.samples.back().y[0] - 8.0) < 1e-10);
    CHECK(std::abs(tr.samples.back().y[1] - 12.0) < 1e-10);

    const Trajectory back = integrate(jet(2, {8, 12, 12, 6, 0, 0, 0}), 0.0);
    CHECK(std::abs(back.samples.back().y[0]) < 1e-10);
}

TEST_CASE("integration follows the canonical branch") {
    const NumericJet start = canform_jet();
    CHECK(start.y[1] == doctest::Approx(4.0));
    const Trajectory tr = integrate(start, 0.3);
    REQUIRE(tr.status == IntegrationStatus::Completed);
    const double oracle = canform_branch(0.3);
    CHECK(std::abs(tr.samples.back().y[0] - oracle) < 1e-8);
}

TEST_CASE("integration guards") {
    CHECK(code_of([] { integrate(jet(0, {0, 0, 0, 0, 1, 0, 0}), 1.0); }) == ErrorCode::SingularJet);
    // y''' = 2e-8 shrinking at unit rate: crosses the guard almost at once.
    const Trajectory tr = integrate(jet(0, {0, 0, 0, 2e-8, -1, 0, 0}), 1.0);
    CHECK(tr.status == IntegrationStatus::SingularityApproached);
    CHECK(tr.samples.back().x < 1e-6);
    IntegratorConfig tight;
    tight.max_steps = 3;
    CHECK(code_of([&] { integrate(canform_jet(), 0.3, tight); }) == ErrorCode::StepLimitExceeded);
    IntegratorConfig bad;
    bad.rtol = 0;
    CHECK(code_of([&] { integrate(canform_jet(), 0.3, bad); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("convergence order") {
    const NumericJet start = canform_jet();
    const double oracle = canform_branch(0.3);
    // Fixed steps: halving h divides the global error by about 2^5. Coarser
    // steps are pre-asymptotic here (the error changes sign near h = 0.3/8).
    auto fixed_error = [&](double h) {
        IntegratorConfig cfg;
        cfg.fixed_step = h;
        return std::abs(integrate(start, 0.3, cfg).samples.back().y[0] - oracle);
    };
    const double ratio = fixed_error(0.3 / 32) / fixed_error(0.3 / 64);
    CHECK(ratio > 32.0 / 4);
    CHECK(ratio < 32.0 * 4);
    // Adaptive: a decade of tolerance buys about a decade of error.
    auto adaptive_error = [&](double tol) {
        IntegratorConfig cfg;
        cfg.rtol = tol;
        cfg.atol = tol;
        return std::abs(integrate(start, 0.3, cfg).samples.back().y[0] - oracle);
    };
    const double decade = adaptive_error(1e-7) / adaptive_error(1e-8);
    CHECK(decade > 10.0 / 4);
    CHECK(decade < 10.0 * 4);
}

TEST_CASE("symmetry transport of integrated samples") {
    PointTransformationParams q;
    q.c1 = Rational(1, 3);
    q.c2 = Rational(-1, 5);
    q.c3 = Rational(1, 7);
    q.c4 = 2;
    q.c5 = Rational(3, 2);
    q.c6 = Rational(1, 4);
    q.c7 = Rational(1, 5);
    const Trajectory tr = integrate(canform_jet(), 0.3);
    const ParametricCurve moved = apply_point_transformation(canonical_curve().parametric, q);
    const auto jets = jet_from_parametric(moved, 6);
    NumericJet start{to_double(moved.x().evaluate(Rational(0))), {to_double(moved.y().evaluate(Rational(0)))}};
    for (const auto& j : jets) start.y.push_back(to_double(j.evaluate(Rational(0))));
    for (std::size_t i = tr.samples.size() / 4; i < tr.samples.size(); i += tr.samples.size() / 4) {
        const auto [X, Y] = map_point(q, tr.samples[i].x, tr.samples[i].y[0]);
        const Trajectory other = integrate(start, X);
        CHECK(std::abs(other.samples.back().y[0] - Y) < 1e-7);
    }
}

TEST_CASE("linearisation along the canonical curve") {
    const ParametricCurve c = canonical_curve().parametric;
    CHECK(linearization_residual({P("1")}, c).is_zero());
    for (const auto& h : symmetry_generators()) CHECK(linearization_residual(h, c).is_zero());
    CHECK_FALSE(linearization_residual({P("x^7")}, c).is_zero());
}

TEST_CASE("complex roots") {
    auto r = complex_roots(P("x^2 + 1"));
    REQUIRE(r.size() == 2);
    CHECK(std::abs(r[0] - std::complex<double>(0, -1)) < 1e-14);
    CHECK(std::abs(r[1] - std::complex<double>(0, 1)) < 1e-14);

    const double s = std::sqrt(-1 + 2 / std::sqrt(3.0)), t = std::sqrt(1 + 2 / std::sqrt(3.0));
    r = complex_roots(P("-3*x^4 - 6*x^2 + 1"));
    REQUIRE(r.size() == 4);
    CHECK(std::abs(r[0] - std::complex<double>(-s, 0)) < 1e-14);
    CHECK(std::abs(r[1] - std::complex<double>(0, -t)) < 1e-14);
    CHECK(std::abs(r[2] - std::complex<double>(0, t)) < 1e-14);
    CHECK(std::abs(r[3] - std::complex<double>(s, 0)) < 1e-14);
    CHECK(s == doctest::Approx(0.3933199).epsilon(1e-7));
    CHECK(t == doctest::Approx(1.4678899).epsilon(1e-7));

    r = complex_roots(P("(x - 1)^3"));
    REQUIRE(r.size() == 3);
    for (const auto& z : r) CHECK(std::abs(z - 1.0) < 1e-15);

    CHECK(code_of([] { complex_roots(P("3")); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("predicted jets match exact implicit jets") {
    std::mt19937 rng(2);
    for (int i = 0; i < 5; ++i) {
        const GeneralSolutionParams p = random_params(rng);
        const auto data = general_data(p, random_rational(rng, 4));
        if (!data) continue;
        const ParamVector pred = predicted_jet(to_param_vector(p), data->x0, data->y[0]);
        for (int k = 0; k < 7; ++k) CHECK(std::abs(pred[k] - data->y[k]) <= 1e-9 * (1 + std::abs(data->y[k])));
    }
}

TEST_CASE("finite-difference and automatic Jacobians agree") {
    std::mt19937 rng(3);
    for (int i = 0; i < 5; ++i) {
        const GeneralSolutionParams p = random_params(rng);
        const auto data = general_data(p, random_rational(rng, 4));
        if (!data) continue;
        const ParamVector c = to_param_vector(p);
        const auto fd = jacobian_finite_difference(c, data->x0, data->y[0]);
        const auto ad = jacobian_automatic(c, data->x0, data->y[0]);
        for (int k = 0; k < 7; ++k) {
            double row = 0;
            for (int j = 0; j < 7; ++j) row = std::max(row, std::abs(ad[k][j]));
            for (int j = 0; j < 7; ++j) CHECK(std::abs(fd[k][j] - ad[k][j]) <= 1e-5 * (1 + row));
        }
    }
}

TEST_CASE("fitting recovers parameters") {
    std::mt19937 rng(4);
    std::uniform_real_distribution<double> wiggle(-0.01, 0.01);
    int trials = 0;
    while (trials < 6) {
        const GeneralSolutionParams p = random_params(rng);
        const auto data = general_data(p, random_rational(rng, 4));
        if (!data) continue;
        ++trials;
        FitConfig cfg;
        cfg.tolerance = 1e-9;
        cfg.initial_guess = to_param_vector(p);
        for (auto& c : cfg.initial_guess) c *= 1 + wiggle(rng);
        const FitResult r = fit_parameters(*data, cfg);
        CHECK(r.residual_norm < 1e-9);
        CHECK(r.iterations <= 25);

        // Idempotence: refitting data produced by the fitted parameters.
        const ParamVector again = predicted_jet(r.c, data->x0, data->y[0]);
        NumericJet regenerated{data->x0, std::vector<double>(again.begin(), again.end())};
        FitConfig cfg2;
        cfg2.initial_guess = r.c;
        const FitResult r2 = fit_parameters(regenerated, cfg2);
        CHECK(r2.iterations == 0);
        const ParamVector pred2 = predicted_jet(r2.c, data->x0, data->y[0]);
        for (int k = 0; k < 7; ++k) CHECK(std::abs(pred2[k] - again[k]) <= 1e-12 * (1 + std::abs(again[k])));
    }
}

TEST_CASE("fitting canonical data") {
    const NumericJet data = canform_jet();
    FitConfig cfg;
    cfg.initial_guess = {0.01, -0.01, 0.005, 1.01, 0.99, 0.01, -0.01};
    const FitResult r = fit_parameters(data, cfg);
    CHECK(r.residual_norm < 1e-9);
    const ParamVector pred = predicted_jet(r.c, 0, 0);
    for (int k = 0; k < 7; ++k) CHECK(std::abs(pred[k] - data.y[k]) < 1e-9 * (1 + std::abs(data.y[k])));
}

TEST_CASE("fit errors") {
    FitConfig cfg;
    cfg.max_iterations = 1;
    NumericJet far = canform_jet();
    far.y[6] += 50;
    CHECK(code_of([&] { fit_parameters(far, cfg); }) == ErrorCode::MaxIterations);
    FitConfig degenerate;
    degenerate.initial_guess = {0, 0, 0, 0, 1, 0, 0};
    CHECK(code_of([&] { fit_parameters(canform_jet(), degenerate); }) == ErrorCode::BranchSelectionFailure);
    // All parameters that only move y by a constant leave y' .. y^(6) blind.
    FitConfig flat;
    flat.initial_guess = {0, 0, 0, 1, 0, 0, 0};
    CHECK(code_of([&] { fit_parameters(canform_jet(), flat); }) == ErrorCode::SingularJacobian);
}
