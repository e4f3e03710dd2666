#pragma once

#include <complex>
#include <span>
#include <vector>

namespace contact_sextic {

/// Simultaneous Aberth-Ehrlich iteration for the roots of a polynomial with
/// complex coefficients (constant term first). Starts from points spread on a
/// circle whose radius comes from the Fujiwara bound, then polishes every root
/// with a few Newton steps. Multiple roots converge only linearly; callers with
/// exact input should split off multiplicities first.
std::vector<std::complex<double>> aberth_roots(std::span<const std::complex<double>> coeffs,
                                               int max_iterations = 500);

std::vector<std::complex<double>> aberth_roots(std::span<const double> coeffs,
                                               int max_iterations = 500);

}  // namespace contact_sextic
