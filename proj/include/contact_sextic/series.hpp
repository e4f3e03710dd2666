#pragma once

#include <cstddef>
#include <vector>

#include "contact_sextic/error.hpp"
#include "contact_sextic/multipoly.hpp"

namespace contact_sextic {

/// Truncated power series c[0] + c[1] h + ... + c[n-1] h^(n-1).
template <class T>
struct Series {
    std::vector<T> c;

    Series() = default;
    Series(std::size_t n, const T& constant) : c(n, T(0)) {
        if (n) c[0] = constant;
    }
    std::size_t size() const { return c.size(); }

    Series& operator+=(const Series& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
        return *this;
    }
    Series& operator-=(const Series& o) {
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
        return *this;
    }
    Series& operator*=(const T& s) {
        for (auto& v : c) v *= s;
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(Series a, const T& s) { return a *= s; }
    friend Series operator*(const T& s, Series a) { return a *= s; }
    friend Series operator*(const Series& a, const Series& b) {
        Series out(a.size(), T(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; i + j < a.size(); ++j) out.c[i + j] += a.c[i] * b.c[j];
        return out;
    }
    Series operator-() const {
        Series out = *this;
        for (auto& v : out.c) v = -v;
        return out;
    }
    Series pow(unsigned n) const {
        Series out(size(), T(1));
        for (unsigned k = 0; k < n; ++k) out = out * *this;
        return out;
    }
};

/// Evaluates a polynomial in (x, y) on truncated series.
template <class T, class Convert>
Series<T> evaluate_on_series(const MultiPoly& f, const Series<T>& xs, const Series<T>& ys, Convert convert) {
    const auto& vars = f.variables();
    std::vector<const Series<T>*> args;
    for (const auto& v : vars) {
        if (v == "x")
            args.push_back(&xs);
        else if (v == "y")
            args.push_back(&ys);
        else
            throw Error(ErrorCode::UnboundVariable, "series evaluation supports x and y only, got " + v);
    }
    std::vector<std::vector<Series<T>>> powers(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const unsigned d = f.degree(vars[i]);
        powers[i].push_back(Series<T>(xs.size(), T(1)));
        for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * *args[i]);
    }
    Series<T> acc(xs.size(), T(0));
    for (const auto& [e, coeff] : f.terms()) {
        Series<T> term(xs.size(), convert(coeff));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) term = term * powers[i][e[i]];
        acc += term;
    }
    return acc;
}

/// Taylor coefficients a_0..a_order of the branch y(x0 + h) of F(x, y) = 0
/// through (x0, y0). F maps (x-series, y-series) to a series. The order-k
/// coefficient of F depends on a_k only through F_y a_k, so each step is one
/// division. Throws NotOnCurve / SingularBranch.
template <class T, class Eval>
std::vector<T> implicit_taylor(Eval&& F, const T& x0, const T& y0, unsigned order, const T& tolerance) {
    const std::size_t n = order + 1;
    Series<T> xs(n, x0);
    if (n > 1) xs.c[1] = T(1);
    Series<T> ys(n, y0);
    auto abs_value = [](const T& v) { return v < T(0) ? T(-v) : v; };
    // Value and F_y from a first-order probe in y.
    Series<T> probe_x(2, x0);
    Series<T> probe_y(2, y0);
    probe_y.c[1] = T(1);
    const Series<T> probe = F(probe_x, probe_y);
    if (abs_value(probe.c[0]) > tolerance) throw Error(ErrorCode::NotOnCurve, "point does not lie on the curve");
    const T fy = probe.c[1];
    if (abs_value(fy) <= tolerance) throw Error(ErrorCode::SingularBranch, "dF/dy vanishes at the point");
    for (std::size_t k = 1; k < n; ++k) {
        const Series<T> value = F(xs, ys);
        ys.c[k] = -value.c[k] / fy;
    }
    return ys.c;
}

}  // namespace contact_sextic
