#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "contact_sextic/error.hpp"
#include "contact_sextic/numeric.hpp"

namespace contact_sextic::cli {

namespace {

std::vector<double> real_roots(const UniPoly& p) {
    std::vector<double> out;
    if (p.degree() < 1) return out;
    for (const auto& z : complex_roots(MultiPoly::from_unipoly(p, "t")))
        if (std::abs(z.imag()) <= 1e-7 * (1 + std::abs(z.real()))) out.push_back(z.real());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              out.end());
    return out;
}

// value at t = +-infinity, when finite
std::optional<double> at_infinity(const RationalFunction& r) {
    const int dn = r.numerator().degree(), dd = r.denominator().degree();
    if (r.is_zero() || dn < dd) return 0.0;
    if (dn > dd) return std::nullopt;
    return to_double(r.numerator().leading() / r.denominator().leading());
}

std::optional<PlotPoint> point_at(const ParametricCurve& c, double t) {
    if (std::isinf(t)) {
        const auto x = at_infinity(c.x()), y = at_infinity(c.y());
        if (!x || !y) return std::nullopt;
        return PlotPoint{t, *x, *y};
    }
    try {
        const double x = c.x().evaluate(t), y = c.y().evaluate(t);
        if (!std::isfinite(x) || !std::isfinite(y)) return std::nullopt;
        return PlotPoint{t, x, y};
    } catch (const Error&) {
        return std::nullopt;
    }
}

double quantile(std::vector<double> v, double q) {
    std::sort(v.begin(), v.end());
    return v[static_cast<std::size_t>(q * static_cast<double>(v.size() - 1))];
}

std::array<double, 4> auto_viewport(const Plot& p, const PlotConfig& cfg) {
    std::vector<double> xs, ys;
    for (const auto& s : p.samples) {
        xs.push_back(s.x);
        ys.push_back(s.y);
    }
    if (xs.empty()) return {-1, 1, -1, 1};
    // trim the far tails near poles, then make sure the cusps are inside
    double x0 = quantile(xs, 0.1), x1 = quantile(xs, 0.9);
    double y0 = quantile(ys, 0.1), y1 = quantile(ys, 0.9);
    for (const auto& c : p.cusps) {
        x0 = std::min(x0, c.x), x1 = std::max(x1, c.x);
        y0 = std::min(y0, c.y), y1 = std::max(y1, c.y);
    }
    double w = std::max(x1 - x0, 1e-3), h = std::max(y1 - y0, 1e-3);
    const double cx = (x0 + x1) / 2, cy = (y0 + y1) / 2;
    w *= 1.2, h *= 1.2;
    // equal scale on both axes
    const double aspect = static_cast<double>(cfg.width) / cfg.height;
    if (w / h < aspect)
        w = h * aspect;
    else
        h = w / aspect;
    return {cx - w / 2, cx + w / 2, cy - h / 2, cy + h / 2};
}

// Liang-Barsky; false when the segment misses the box
bool clip(PlotPoint& a, PlotPoint& b, const std::array<double, 4>& v) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    double u0 = 0, u1 = 1;
    const double pp[4] = {-dx, dx, -dy, dy};
    const double qq[4] = {a.x - v[0], v[1] - a.x, a.y - v[2], v[3] - a.y};
    for (int i = 0; i < 4; ++i) {
        if (pp[i] == 0) {
            if (qq[i] < 0) return false;
            continue;
        }
        const double r = qq[i] / pp[i];
        if (pp[i] < 0)
            u0 = std::max(u0, r);
        else
            u1 = std::min(u1, r);
        if (u0 > u1) return false;
    }
    const PlotPoint a0 = a;
    const double dt = b.t - a.t;
    auto lerp = [&](double u) {
        return PlotPoint{std::isfinite(dt) ? a0.t + u * dt : (u < 0.5 ? a0.t : b.t), a0.x + u * dx, a0.y + u * dy};
    };
    if (u1 < 1) b = lerp(u1);
    if (u0 > 0) a = lerp(u0);
    return true;
}

}  // namespace

Plot sample_curve(const ParametricCurve& c, const PlotConfig& cfg) {
    if (cfg.samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 samples");
    const bool uniform = cfg.tmin && cfg.tmax;
    if (uniform && !(*cfg.tmin < *cfg.tmax)) throw Error(ErrorCode::InvalidArgument, "tmin must be below tmax");
    Plot p;
    for (const auto& den : {c.x().denominator(), c.y().denominator()})
        for (double r : real_roots(den)) p.poles.push_back(r);
    std::sort(p.poles.begin(), p.poles.end());
    p.poles.erase(std::unique(p.poles.begin(), p.poles.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                  p.poles.end());

    const RationalFunction xd = c.x().derivative(), yd = c.y().derivative();
    for (double r : real_roots(gcd(xd.numerator(), yd.numerator())))
        if (auto q = point_at(c, r)) p.cusps.push_back(*q);

    std::vector<std::optional<PlotPoint>> grid;
    for (int i = 0; i < cfg.samples; ++i) {
        const double u = static_cast<double>(i) / (cfg.samples - 1);
        double t;
        if (uniform) {
            t = *cfg.tmin + u * (*cfg.tmax - *cfg.tmin);
        } else {
            const double theta = std::numbers::pi * (u - 0.5);
            t = i == 0 ? -INFINITY : i == cfg.samples - 1 ? INFINITY : std::tan(theta);
        }
        grid.push_back(point_at(c, t));
        if (grid.back()) p.samples.push_back(*grid.back());
    }
    p.viewport = cfg.viewport ? *cfg.viewport : auto_viewport(p, cfg);

    std::vector<PlotPoint> cur;
    auto flush = [&] {
        if (cur.size() >= 2) p.segments.push_back(cur);
        cur.clear();
    };
    for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
        if (!grid[i] || !grid[i + 1]) {
            flush();
            continue;
        }
        PlotPoint a = *grid[i], b = *grid[i + 1];
        const bool pole = std::any_of(p.poles.begin(), p.poles.end(), [&](double r) { return a.t <= r && r <= b.t; });
        if (pole) {
            flush();
            continue;
        }
        const PlotPoint b_orig = b;
        if (!clip(a, b, p.viewport)) {
            flush();
            continue;
        }
        if (cur.empty() || cur.back().x != a.x || cur.back().y != a.y) {
            flush();
            cur.push_back(a);
        }
        cur.push_back(b);
        if (b.x != b_orig.x || b.y != b_orig.y) flush();
    }
    flush();
    return p;
}

std::string render_svg(const Plot& p, const PlotConfig& cfg) {
    const auto& v = p.viewport;
    const double W = cfg.width, H = cfg.height;
    auto px = [&](double x) { return (x - v[0]) / (v[1] - v[0]) * W; };
    auto py = [&](double y) { return H - (y - v[2]) / (v[3] - v[2]) * H; };
    std::ostringstream s;
    s.precision(6);
    s << std::fixed;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << cfg.width << "\" height=\"" << cfg.height
      << "\" viewBox=\"0 0 " << cfg.width << ' ' << cfg.height << "\">\n";
    s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s << "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    if (v[0] < 0 && v[1] > 0) s << "<line x1=\"" << px(0) << "\" y1=\"0\" x2=\"" << px(0) << "\" y2=\"" << H << "\"/>\n";
    if (v[2] < 0 && v[3] > 0) s << "<line x1=\"0\" y1=\"" << py(0) << "\" x2=\"" << W << "\" y2=\"" << py(0) << "\"/>\n";
    s << "</g>\n<g fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\">\n";
    for (const auto& seg : p.segments) {
        s << "<polyline points=\"";
        for (std::size_t i = 0; i < seg.size(); ++i) s << (i ? " " : "") << px(seg[i].x) << ',' << py(seg[i].y);
        s << "\"/>\n";
    }
    s << "</g>\n<g fill=\"#c0392b\">\n";
    for (const auto& c : p.cusps)
        if (c.x >= v[0] && c.x <= v[1] && c.y >= v[2] && c.y <= v[3])
            s << "<circle cx=\"" << px(c.x) << "\" cy=\"" << py(c.y) << "\" r=\"3\"/>\n";
    s << "</g>\n";
    if (!cfg.title.empty())
        s << "<text x=\"10\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << cfg.title << "</text>\n";
    s << "</svg>\n";
    return s.str();
}

std::string render_csv(const Plot& p) {
    std::ostringstream s;
    s.precision(17);
    s << "t,x,y,segment\n";
    for (std::size_t k = 0; k < p.segments.size(); ++k)
        for (const auto& q : p.segments[k]) s << q.t << ',' << q.x << ',' << q.y << ',' << k << '\n';
    return s.str();
}

}  // namespace contact_sextic::cli
