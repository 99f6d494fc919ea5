#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qaoa/oracle.hpp"
#include "qaoa/simulator.hpp"
#include "qaoa/strategies.hpp"

using namespace qaoa;

namespace {

const IsingInstance kSingleEdge{2, {{0, 1, 1.0}}, 0.0, "single"};

double fresh_expectation(const IsingInstance& instance, const Schedule& schedule) {
    const CostTable table = build_cost_table(instance);
    return expectation(evolve(table, schedule), table);
}

}  // namespace

TEST_CASE("standard strategy solves the single edge at p=1") {
    const StrategyReport report = run_standard(kSingleEdge, 1, 200);
    CHECK(report.expectation <= -0.99);
    CHECK(report.eval_count >= 2);
    CHECK(report.eval_count <= 200);
    CHECK(report.expectation ==
          doctest::Approx(fresh_expectation(kSingleEdge, report.schedule))
              .epsilon(1e-10));
    CHECK(report.ratio == doctest::Approx(report.expectation / -1.0).epsilon(1e-10));

    CHECK_THROWS_AS(run_standard(kSingleEdge, 1, 0), std::invalid_argument);
}

TEST_CASE("interp at p=1 behaves like a single standard level") {
    const StrategyReport interp = run_interp(kSingleEdge, 1, 200);
    CHECK(interp.expectation <= -0.99);
    CHECK(interp.schedule.depth() == 1);
}

TEST_CASE("interp budget contract and improvement over levels") {
    const IsingInstance inst = gen_random_ising(8, 0.6, 5);
    const int p = 4;
    const StrategyReport report = run_interp(inst, p, 150);
    CHECK(report.eval_count <= p * 150);
    CHECK(report.schedule.depth() == p);
    CHECK(report.expectation ==
          doctest::Approx(fresh_expectation(inst, report.schedule)).epsilon(1e-10));

    // deeper circuits should not do worse than the depth-1 optimum by much
    const StrategyReport level1 = run_standard(inst, 1, 150);
    CHECK(report.expectation <= level1.expectation + 0.1);
}

TEST_CASE("fourier exposes exactly 2k tunable parameters") {
    const IsingInstance inst = gen_random_ising(8, 0.6, 5);
    const StrategyReport report = run_fourier(inst, 4, 2, 150);
    CHECK(report.schedule.depth() == 4);
    CHECK(report.eval_count <= 2 * 150);
    CHECK(report.expectation ==
          doctest::Approx(fresh_expectation(inst, report.schedule)).epsilon(1e-10));

    // the zero coefficient start evaluates to the uniform superposition
    const CostTable table = build_cost_table(inst);
    const Schedule zero = fourier_to_schedule({{0.0, 0.0}, {0.0, 0.0}}, 4);
    CHECK(expectation(evolve(table, zero), table) ==
          doctest::Approx(inst.offset).epsilon(1e-10));
}

TEST_CASE("linxfer training finds the single-edge optimum") {
    const LinearParams lp = linxfer_train(kSingleEdge, 1, 1024, 3);
    const StrategyReport report = linxfer_apply(lp, kSingleEdge, 1);
    CHECK(report.expectation <= -0.95);
}

TEST_CASE("linxfer training with one trial returns the sampled point") {
    const LinearParams lp = linxfer_train(kSingleEdge, 2, 1, 3);
    CHECK(std::isfinite(lp.gamma_slope));
    const LinearParams again = linxfer_train(kSingleEdge, 2, 1, 3);
    CHECK(lp.gamma_slope == again.gamma_slope);
    CHECK(lp.beta_intcp == again.beta_intcp);
}

TEST_CASE("linxfer transfer is free and reproducible") {
    const IsingInstance inst = gen_random_ising(10, 0.6, 9);
    const StrategyReport a =
        linxfer_apply(presets::pretrained_n16_d06_p8(), inst, 8);
    CHECK(a.eval_count == 0);
    CHECK(a.name == "linxfer");
    const StrategyReport b =
        linxfer_apply(presets::pretrained_n16_d06_p8(), inst, 8);
    CHECK(a.expectation == b.expectation);
    CHECK(a.ratio == b.ratio);
}

TEST_CASE("normalized transfer equals the gamma-rescaled plain evolution") {
    const IsingInstance inst = gen_random_ising(10, 0.6, 14);
    const double e_ref = brute_force_min(inst).energy;
    TransferOptions options;
    options.normalize = NormalizationMode::sqrt_edges();
    options.e_ref = e_ref;
    const LinearParams lp = presets::rough_guess();
    const StrategyReport normalized = linxfer_apply(lp, inst, 8, options);
    CHECK(normalized.eval_count == 0);

    // evolving the normalized instance equals evolving the original with
    // gamma divided by the normalization factor
    const double factor = normalization_factor(inst, *options.normalize, e_ref);
    Schedule rescaled = linear_schedule(lp, 8);
    for (double& g : rescaled.gammas) g /= factor;
    CHECK(normalized.expectation ==
          doctest::Approx(fresh_expectation(inst, rescaled)).epsilon(1e-10));
}

TEST_CASE("normalized transfer without e_ref falls back to annealing") {
    const IsingInstance inst = gen_random_ising(10, 0.6, 14);
    TransferOptions options;
    options.normalize = NormalizationMode::sqrt_edges();
    options.anneal_seed = 5;
    const StrategyReport a = linxfer_apply(presets::rough_guess(), inst, 4, options);
    const StrategyReport b = linxfer_apply(presets::rough_guess(), inst, 4, options);
    CHECK(a.expectation == b.expectation);
    CHECK(a.e_ref == b.e_ref);
    CHECK(a.e_ref < 0.0);
}

TEST_CASE("identity normalization factor changes nothing") {
    const IsingInstance inst = gen_random_ising(8, 0.6, 3);
    // pick X so that |e_ref|/X == 1
    const double e_ref = brute_force_min(inst).energy;
    TransferOptions options;
    options.normalize = NormalizationMode::fixed_x(std::abs(e_ref));
    options.e_ref = e_ref;
    const LinearParams lp = presets::pretrained_n16_d06_p8();
    const StrategyReport normalized = linxfer_apply(lp, inst, 4, options);
    const StrategyReport plain = linxfer_apply(lp, inst, 4);
    CHECK(normalized.expectation ==
          doctest::Approx(plain.expectation).epsilon(1e-10));
}

TEST_CASE("strategies are reproducible") {
    const IsingInstance inst = gen_random_ising(6, 0.8, 1);
    const StrategyReport a = run_standard(inst, 2, 120);
    const StrategyReport b = run_standard(inst, 2, 120);
    CHECK(a.expectation == b.expectation);
    CHECK(a.eval_count == b.eval_count);
    CHECK(a.schedule.gammas == b.schedule.gammas);
}

TEST_CASE("pretrained transfer needs the evolution-angle form") {
    const IsingInstance inst = gen_random_ising(16, 0.6, 0);
    const StrategyReport evo =
        linxfer_apply(presets::pretrained_evolution_angles(), inst, 8);
    const StrategyReport gate =
        linxfer_apply(presets::pretrained_n16_d06_p8(), inst, 8);
    CHECK(evo.ratio >= 0.75);
    CHECK(gate.ratio <= 0.4);  // un-converted gate angles transfer poorly
}
