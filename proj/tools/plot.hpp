#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "contact_sextic/curve_types.hpp"

namespace contact_sextic::cli {

struct PlotConfig {
    int samples = 4000;
    // uniform t-grid on [tmin, tmax] when both are set, otherwise t = tan(theta)
    // on a uniform theta-grid, which covers the whole line including t = infinity
    std::optional<double> tmin, tmax;
    // xmin, xmax, ymin, ymax; automatic when unset
    std::optional<std::array<double, 4>> viewport;
    int width = 800, height = 600;
    std::string title;
};

struct PlotPoint {
    double t, x, y;
};

struct Plot {
    std::array<double, 4> viewport{};
    std::vector<std::vector<PlotPoint>> segments;  // clipped polylines
    std::vector<double> poles;                     // real t where a denominator vanishes
    std::vector<PlotPoint> cusps;                  // real t with xdot = ydot = 0
    std::vector<PlotPoint> samples;                // raw finite samples, unclipped
};

Plot sample_curve(const ParametricCurve& c, const PlotConfig& cfg);

std::string render_svg(const Plot& p, const PlotConfig& cfg);
// columns: t,x,y,segment; one row per clipped vertex
std::string render_csv(const Plot& p);

}  // namespace contact_sextic::cli
