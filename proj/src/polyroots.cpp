#include "contact_sextic/polyroots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace contact_sextic {

namespace {

using cplx = std::complex<double>;

struct HornerResult {
    cplx value;
    cplx slope;
};

HornerResult horner(std::span<const cplx> c, cplx z) {
    cplx p = c.back();
    cplx dp = 0.0;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        dp = dp * z + p;
        p = p * z + c[i];
    }
    return {p, dp};
}

// Running error bound of Horner's scheme, used as a stopping criterion.
double horner_error_bound(std::span<const cplx> c, cplx z) {
    const double r = std::abs(z);
    double s = std::abs(c.back());
    for (std::size_t i = c.size() - 1; i-- > 0;) s = s * r + std::abs(c[i]);
    return s * 4.0 * std::numeric_limits<double>::epsilon();
}

}  // namespace

std::vector<cplx> aberth_roots(std::span<const cplx> coeffs, int max_iterations) {
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    while (!c.empty() && c.back() == cplx(0.0)) c.pop_back();
    if (c.size() < 2) return {};

    // Zero roots are exact; strip them so the circle start is meaningful.
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros] == cplx(0.0)) ++zeros;
    std::vector<cplx> roots(zeros, cplx(0.0));
    c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
    const std::size_t n = c.size() - 1;
    if (n == 0) return roots;
    if (n == 1) {
        roots.push_back(-c[0] / c[1]);
        return roots;
    }

    // Fujiwara bound on root moduli.
    double bound = 0.0;
    const double lead = std::abs(c[n]);
    for (std::size_t k = 1; k <= n; ++k) {
        double term = std::pow(std::abs(c[n - k]) / lead, 1.0 / static_cast<double>(k));
        if (k == n) term = std::pow(std::abs(c[0]) / (2.0 * lead), 1.0 / static_cast<double>(n));
        bound = std::max(bound, term);
    }
    bound *= 2.0;
    const double radius = bound > 0.0 ? 0.5 * bound : 1.0;

    std::vector<cplx> z(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n) + 0.4;
        z[k] = std::polar(radius, angle);
    }

    std::vector<bool> done(n, false);
    for (int it = 0; it < max_iterations; ++it) {
        bool all_done = true;
        for (std::size_t k = 0; k < n; ++k) {
            if (done[k]) continue;
            const auto [p, dp] = horner(c, z[k]);
            if (std::abs(p) <= horner_error_bound(c, z[k])) {
                done[k] = true;
                continue;
            }
            all_done = false;
            const cplx ratio = p / dp;
            cplx repulsion = 0.0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) repulsion += 1.0 / (z[k] - z[j]);
            const cplx step = ratio / (1.0 - ratio * repulsion);
            z[k] -= step;
            if (std::abs(step) <= 1e-16 * std::max(1.0, std::abs(z[k]))) done[k] = true;
        }
        if (all_done) break;
    }

    // Newton polish.
    for (auto& r : z) {
        for (int it = 0; it < 3; ++it) {
            const auto [p, dp] = horner(c, r);
            if (dp == cplx(0.0) || std::abs(p) <= horner_error_bound(c, r)) break;
            r -= p / dp;
        }
    }
    roots.insert(roots.end(), z.begin(), z.end());
    return roots;
}

std::vector<cplx> aberth_roots(std::span<const double> coeffs, int max_iterations) {
    std::vector<cplx> c(coeffs.begin(), coeffs.end());
    auto roots = aberth_roots(std::span<const cplx>(c), max_iterations);
    // Real input: snap imaginary parts that are pure rounding noise.
    for (auto& r : roots)
        if (std::abs(r.imag()) <= 1e-14 * std::max(1.0, std::abs(r.real()))) r = {r.real(), 0.0};
    return roots;
}

}  // namespace contact_sextic
