#pragma once

#include <array>
#include <complex>
#include <vector>

#include "contact_sextic/contact.hpp"
#include "contact_sextic/curves.hpp"
#include "contact_sextic/families.hpp"
#include "contact_sextic/multipoly.hpp"

namespace contact_sextic {

/// 10 y3^3 y7 - 70 y3^2 y4 y6 - 49 y3^2 y5^2 + 280 y3 y4^2 y5 - 175 y4^4 in doubles.
double ode_expression(double y3, double y4, double y5, double y6, double y7);

/// The y7 that makes the expression vanish, from y[3..6] of the jet.
/// Throws SingularJet when |y'''| < eps_sing, InvalidArgument for a short jet.
double y7_from_jet(const NumericJet& jet, double eps_sing = 1e-8);

struct IntegratorConfig {
    double rtol = 1e-10;
    double atol = 1e-12;
    long max_steps = 200000;
    double eps_sing = 1e-8;
    /// Starting step; 0 picks one from the initial derivatives.
    double initial_step = 0.0;
    /// Nonzero switches off error control and takes steps of this size.
    double fixed_step = 0.0;
};

enum class IntegrationStatus { Completed, SingularityApproached };

struct TrajectorySample {
    double x = 0.0;
    std::array<double, 7> y{};  // y, y', ..., y^(6)
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
    IntegrationStatus status = IntegrationStatus::Completed;
    long accepted = 0;
    long rejected = 0;
};

/// Dormand-Prince 5(4) with PI step control on the first-order system
/// (y, ..., y^(6))' = (y', ..., y^(6), y7_from_jet). Stops early with
/// SingularityApproached once |y'''| drops below eps_sing. Throws SingularJet
/// if the start is already singular, StepLimitExceeded, InvalidArgument.
Trajectory integrate(const NumericJet& start, double x_end, const IntegratorConfig& cfg = {});

/// Numerator of L[v] = sum_{k=3..7} dF/dy_k * v^(k) along the solution, with
/// v = H(x, y, y') and derivatives taken in x. Throws VerticalCurve.
MultiPoly linearization_residual(const ContactHamiltonian& H, const ParametricCurve& solution);

/// All complex roots of a univariate polynomial, repeated by multiplicity.
/// Throws InvalidArgument for constants or several variables.
std::vector<std::complex<double>> complex_roots(const MultiPoly& f);

using ParamVector = std::array<double, 7>;

ParamVector to_param_vector(const GeneralSolutionParams& p);

struct FitConfig {
    int max_iterations = 25;
    double tolerance = 1e-11;
    ParamVector initial_guess{0, 0, 0, 1, 1, 0, 0};
    double damping = 1.0;  // first trial step length of the line search
};

struct FitResult {
    ParamVector c{};
    ParamVector residuals{};  // predicted minus data, k = 0..6
    double residual_norm = 0.0;
    int iterations = 0;
};

/// max_k |r_k| / (1 + |data_k|).
double scaled_residual_norm(const ParamVector& residuals, const NumericJet& data);

/// y, y', ..., y^(6) at x0 of the branch of the general sextic closest to
/// y_hint (ties broken by larger |F_y|). Throws BranchSelectionFailure.
ParamVector predicted_jet(const ParamVector& c, double x0, double y_hint);

/// d(predicted_jet)/dc by central differences with step 1e-6 (1 + |c_j|).
std::array<ParamVector, 7> jacobian_finite_difference(const ParamVector& c, double x0, double y_hint);
/// The same Jacobian by forward-mode automatic differentiation.
std::array<ParamVector, 7> jacobian_automatic(const ParamVector& c, double x0, double y_hint);

/// Newton iteration with halving line search on predicted_jet - data.
/// data needs y..y^(6). Throws SingularJacobian, MaxIterations,
/// BranchSelectionFailure.
FitResult fit_parameters(const NumericJet& data, const FitConfig& cfg = {});

}  // namespace contact_sextic
