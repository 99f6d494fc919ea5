#pragma once

#include <string>
#include <vector>

#include "qaoa/instance.hpp"
#include "qaoa/schedule.hpp"

namespace qaoa {

enum class Plane { gamma_plane, beta_plane };

struct AxisRange {
    double lo = -2.0;
    double hi = 2.0;
};

// 2-D grid of exact expectation values over one (slope, intercept) plane of
// the linear parameterization; the other plane is held at `fixed`.
struct LandscapeGrid {
    Plane plane = Plane::gamma_plane;
    std::vector<double> slope_axis;
    std::vector<double> intcp_axis;
    std::vector<double> values;  // row-major: values[s * intcp_axis.size() + i]
    LinearParams fixed;          // off-plane components are the ones that matter
    int p = 1;

    double at(std::size_t s, std::size_t i) const {
        return values[s * intcp_axis.size() + i];
    }
};

struct PlaneConfig {
    AxisRange slope_range;
    AxisRange intcp_range;
    int resolution = 64;
    // Off-plane (slope, intercept) pair held fixed during the scan.
    double fixed_slope;
    double fixed_intcp;

    PlaneConfig();
};

LandscapeGrid scan_plane(const IsingInstance& instance, int p, Plane plane,
                         const PlaneConfig& config);

struct BestPoint {
    double slope = 0.0;
    double intcp = 0.0;
    double value = 0.0;
};

// Argmin over cells; ties broken by smallest (slope, intcp) lexicographically.
BestPoint best_point(const LandscapeGrid& grid);

struct ScalingPoint {
    double x = 0.0;
    double best_slope = 0.0;
    double best_intcp = 0.0;
    double best_value = 0.0;
};

// For each X: rescale the instance by 1/(|e_ref|/X), scan the gamma plane,
// record the best point.
std::vector<ScalingPoint> scaling_study(const IsingInstance& instance, int p,
                                        const std::vector<double>& xs, double e_ref,
                                        const PlaneConfig& config);

// Header `slope,intcp,value`, row-major.
void write_landscape_csv(const LandscapeGrid& grid, const std::string& path);

}  // namespace qaoa
