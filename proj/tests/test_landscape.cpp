#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qaoa/landscape.hpp"
#include "qaoa/oracle.hpp"
#include "qaoa/simulator.hpp"

using namespace qaoa;

namespace {

const IsingInstance kSingleEdge{2, {{0, 1, 1.0}}, 0.0, "single"};

double cell_value(const IsingInstance& instance, const LandscapeGrid& grid,
                  std::size_t s, std::size_t i) {
    LinearParams lp = grid.fixed;
    if (grid.plane == Plane::gamma_plane) {
        lp.gamma_slope = grid.slope_axis[s];
        lp.gamma_intcp = grid.intcp_axis[i];
    } else {
        lp.beta_slope = grid.slope_axis[s];
        lp.beta_intcp = grid.intcp_axis[i];
    }
    const CostTable table = build_cost_table(instance);
    return expectation(evolve(table, linear_schedule(lp, grid.p)), table);
}

}  // namespace

TEST_CASE("degenerate single-point grid equals the direct evaluation") {
    const IsingInstance inst = gen_random_ising(8, 0.6, 2);
    PlaneConfig config;
    config.resolution = 1;
    const LinearParams lp{-0.376, -0.165, -0.881, 0.913};
    config.slope_range = {lp.gamma_slope, lp.gamma_slope};
    config.intcp_range = {lp.gamma_intcp, lp.gamma_intcp};
    const LandscapeGrid grid = scan_plane(inst, 8, Plane::gamma_plane, config);
    REQUIRE(grid.values.size() == 1);
    const CostTable table = build_cost_table(inst);
    CHECK(grid.values[0] ==
          doctest::Approx(expectation(evolve(table, linear_schedule(lp, 8)), table))
              .epsilon(1e-12));
}

TEST_CASE("grid cells match fresh evaluations") {
    const IsingInstance inst = gen_random_ising(6, 0.8, 7);
    PlaneConfig config;
    config.resolution = 4;
    const LandscapeGrid grid = scan_plane(inst, 3, Plane::beta_plane, config);
    for (std::size_t s = 0; s < 4; ++s)
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(grid.at(s, i) ==
                  doctest::Approx(cell_value(inst, grid, s, i)).epsilon(1e-10));
}

TEST_CASE("single edge 3x3 scan hits the closed-form optimum") {
    PlaneConfig config;
    config.resolution = 3;
    // at p=1 the slope never enters (gamma_0 is the intercept), so ties along
    // the slope axis exercise the lexicographic rule
    config.slope_range = {0.0, std::numbers::pi / 2};
    config.intcp_range = {-std::numbers::pi / 4, std::numbers::pi / 4};
    config.fixed_slope = 0.0;
    config.fixed_intcp = std::numbers::pi / 8;  // beta held at the optimum
    const LandscapeGrid grid = scan_plane(kSingleEdge, 1, Plane::gamma_plane, config);

    // closed form sin(4 beta) sin(2 gamma): the (slope 0, intcp -pi/4) cell is -1
    CHECK(grid.at(0, 0) == doctest::Approx(-1.0).epsilon(1e-10));
    const BestPoint best = best_point(grid);
    CHECK(best.slope == doctest::Approx(0.0));
    CHECK(best.intcp == doctest::Approx(-std::numbers::pi / 4));
    CHECK(best.value == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("best_point tie-breaking is lexicographic") {
    LandscapeGrid grid;
    grid.plane = Plane::gamma_plane;
    grid.slope_axis = {0.0, 1.0};
    grid.intcp_axis = {-1.0, 2.0};
    grid.values = {5.0, 5.0, 5.0, 5.0};
    const BestPoint best = best_point(grid);
    CHECK(best.slope == 0.0);
    CHECK(best.intcp == -1.0);

    grid.values = {5.0, 3.0, 3.0, 5.0};
    const BestPoint tie = best_point(grid);
    CHECK(tie.slope == 0.0);
    CHECK(tie.intcp == 2.0);

    CHECK_THROWS_AS(best_point(LandscapeGrid{}), std::invalid_argument);
}

TEST_CASE("grid-level scaling covariance") {
    const IsingInstance inst = gen_random_ising(7, 0.7, 19);
    const double c = 2.0;
    PlaneConfig config;
    config.resolution = 5;
    config.slope_range = {-1.0, 1.0};
    config.intcp_range = {-1.0, 1.0};
    const LandscapeGrid base = scan_plane(inst, 3, Plane::gamma_plane, config);

    PlaneConfig halved = config;
    halved.slope_range = {-0.5, 0.5};
    halved.intcp_range = {-0.5, 0.5};
    const LandscapeGrid scaled =
        scan_plane(scale_instance(inst, c), 3, Plane::gamma_plane, halved);
    for (std::size_t k = 0; k < base.values.size(); ++k)
        CHECK(scaled.values[k] == doctest::Approx(c * base.values[k]).epsilon(1e-10));
}

TEST_CASE("scaling study trends toward the origin") {
    const IsingInstance inst = gen_random_ising(9, 0.6, 1);
    const double e_ref = brute_force_min(inst).energy;
    PlaneConfig config;
    config.resolution = 32;
    const auto points = scaling_study(inst, 8, {8.0, 16.0, 32.0}, e_ref, config);
    REQUIRE(points.size() == 3);

    const double cell = 4.0 / 31.0;
    const double diag = cell * std::numbers::sqrt2;
    double previous_norm = 1e300;
    for (const ScalingPoint& point : points) {
        const double norm = std::hypot(point.best_slope, point.best_intcp);
        CHECK(norm <= previous_norm + 2 * diag);
        previous_norm = norm;
    }

    // doubling the target scale should halve the optimal gamma coordinates,
    // up to the grid discretization
    for (std::size_t k = 0; k + 1 < points.size(); ++k) {
        CHECK(std::abs(points[k + 1].best_slope - points[k].best_slope / 2) <= cell);
        CHECK(std::abs(points[k + 1].best_intcp - points[k].best_intcp / 2) <= cell);
    }

    // X chosen so the factor is exactly 1 reproduces the unnormalized scan
    PlaneConfig coarse;
    coarse.resolution = 16;
    const auto identity = scaling_study(inst, 4, {std::abs(e_ref)}, e_ref, coarse);
    const LandscapeGrid plain = scan_plane(inst, 4, Plane::gamma_plane, coarse);
    const BestPoint best = best_point(plain);
    CHECK(identity[0].best_slope == doctest::Approx(best.slope));
    CHECK(identity[0].best_intcp == doctest::Approx(best.intcp));
}
