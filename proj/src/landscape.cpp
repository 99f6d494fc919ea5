#include "qaoa/landscape.hpp"

#include <fstream>
#include <stdexcept>

#include "qaoa/simulator.hpp"

namespace qaoa {

PlaneConfig::PlaneConfig() {
    // Off-plane defaults follow the pre-trained gamma/beta pair: scanning the
    // gamma plane holds beta there and vice versa.
    fixed_slope = presets::pretrained_n16_d06_p8().beta_slope;
    fixed_intcp = presets::pretrained_n16_d06_p8().beta_intcp;
}

namespace {

std::vector<double> make_axis(const AxisRange& range, int resolution) {
    std::vector<double> axis(resolution);
    if (resolution == 1) {
        axis[0] = range.lo;
        return axis;
    }
    for (int k = 0; k < resolution; ++k)
        axis[k] = range.lo + (range.hi - range.lo) * k / (resolution - 1);
    return axis;
}

}  // namespace

LandscapeGrid scan_plane(const IsingInstance& instance, int p, Plane plane,
                         const PlaneConfig& config) {
    if (config.resolution < 1)
        throw std::invalid_argument("resolution must be positive");
    if (p < 1) throw std::invalid_argument("depth must be >= 1");

    const CostTable table = build_cost_table(instance);
    LandscapeGrid grid;
    grid.plane = plane;
    grid.p = p;
    grid.slope_axis = make_axis(config.slope_range, config.resolution);
    grid.intcp_axis = make_axis(config.intcp_range, config.resolution);
    if (plane == Plane::gamma_plane) {
        grid.fixed.beta_slope = config.fixed_slope;
        grid.fixed.beta_intcp = config.fixed_intcp;
    } else {
        grid.fixed.gamma_slope = config.fixed_slope;
        grid.fixed.gamma_intcp = config.fixed_intcp;
    }
    grid.values.resize(grid.slope_axis.size() * grid.intcp_axis.size());

    for (std::size_t s = 0; s < grid.slope_axis.size(); ++s) {
        for (std::size_t i = 0; i < grid.intcp_axis.size(); ++i) {
            LinearParams lp = grid.fixed;
            if (plane == Plane::gamma_plane) {
                lp.gamma_slope = grid.slope_axis[s];
                lp.gamma_intcp = grid.intcp_axis[i];
            } else {
                lp.beta_slope = grid.slope_axis[s];
                lp.beta_intcp = grid.intcp_axis[i];
            }
            grid.values[s * grid.intcp_axis.size() + i] =
                expectation(evolve(table, linear_schedule(lp, p)), table);
        }
    }
    return grid;
}

BestPoint best_point(const LandscapeGrid& grid) {
    if (grid.values.empty()) throw std::invalid_argument("empty grid");
    BestPoint best{grid.slope_axis[0], grid.intcp_axis[0], grid.values[0]};
    for (std::size_t s = 0; s < grid.slope_axis.size(); ++s) {
        for (std::size_t i = 0; i < grid.intcp_axis.size(); ++i) {
            const double value = grid.at(s, i);
            const double slope = grid.slope_axis[s];
            const double intcp = grid.intcp_axis[i];
            if (value < best.value ||
                (value == best.value &&
                 (slope < best.slope ||
                  (slope == best.slope && intcp < best.intcp)))) {
                best = {slope, intcp, value};
            }
        }
    }
    return best;
}

std::vector<ScalingPoint> scaling_study(const IsingInstance& instance, int p,
                                        const std::vector<double>& xs, double e_ref,
                                        const PlaneConfig& config) {
    std::vector<ScalingPoint> points;
    points.reserve(xs.size());
    for (double x : xs) {
        const double factor =
            normalization_factor(instance, NormalizationMode::fixed_x(x), e_ref);
        const IsingInstance normalized = scale_instance(instance, 1.0 / factor);
        const LandscapeGrid grid = scan_plane(normalized, p, Plane::gamma_plane, config);
        const BestPoint best = best_point(grid);
        points.push_back({x, best.slope, best.intcp, best.value});
    }
    return points;
}

void write_landscape_csv(const LandscapeGrid& grid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "slope,intcp,value\n";
    out.precision(17);
    for (std::size_t s = 0; s < grid.slope_axis.size(); ++s)
        for (std::size_t i = 0; i < grid.intcp_axis.size(); ++i)
            out << grid.slope_axis[s] << ',' << grid.intcp_axis[i] << ','
                << grid.at(s, i) << '\n';
}

}  // namespace qaoa
