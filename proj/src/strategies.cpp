#include "qaoa/strategies.hpp"

#include <chrono>
#include <stdexcept>

#include "qaoa/oracle.hpp"
#include "qaoa/simulator.hpp"

namespace qaoa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

StrategyReport finish_report(std::string name, const IsingInstance& instance,
                             const CostTable& table, Schedule schedule,
                             int eval_count, Clock::time_point start) {
    StrategyReport report;
    report.name = std::move(name);
    report.expectation = expectation(evolve(table, schedule), table);
    report.schedule = std::move(schedule);
    report.e_ref = reference_energy(instance);
    report.ratio = report.expectation / report.e_ref;
    report.eval_count = eval_count;
    report.wall_seconds = seconds_since(start);
    return report;
}

// The layer-wise methods refine an initialization that is already inside a
// good valley; an initial trust radius wider than that valley (the optimizer
// default of 1.0) steps straight out of it at depth 1 and never recovers.
// The standard method keeps the wide default because it must travel from the
// distant constant start.
constexpr LocalOptions kRefineOptions{.initial_radius = 0.1};

Schedule schedule_from_flat(const std::vector<double>& x) {
    const std::size_t p = x.size() / 2;
    Schedule schedule;
    schedule.gammas.assign(x.begin(), x.begin() + p);
    schedule.betas.assign(x.begin() + p, x.end());
    return schedule;
}

}  // namespace

StrategyReport run_standard(const IsingInstance& instance, int p, int budget) {
    if (p < 1) throw std::invalid_argument("depth must be >= 1");
    if (budget < 1) throw std::invalid_argument("budget must be positive");
    const auto start = Clock::now();
    const CostTable table = build_cost_table(instance);

    const Objective objective = [&](const std::vector<double>& x) {
        return expectation(evolve(table, schedule_from_flat(x)), table);
    };
    // Every angle starts at magnitude 0.1, oriented along the annealing
    // direction for this phase convention (gamma ramps negative, beta ends
    // positive); the initialization is sign-convention dependent.
    std::vector<double> x0(2 * p, 0.1);
    for (int l = 0; l < p; ++l) x0[l] = -0.1;
    const ObjectiveTrace trace = local_minimize(objective, x0, budget);

    return finish_report("standard", instance, table,
                         schedule_from_flat(trace.best_params), trace.eval_count,
                         start);
}

StrategyReport run_interp(const IsingInstance& instance, int p, int budget_per_level) {
    if (p < 1) throw std::invalid_argument("depth must be >= 1");
    if (budget_per_level < 1) throw std::invalid_argument("budget must be positive");
    const auto start = Clock::now();
    const CostTable table = build_cost_table(instance);

    std::vector<double> gammas{0.1};
    std::vector<double> betas{0.1};
    int eval_count = 0;
    for (int depth = 1; depth <= p; ++depth) {
        std::vector<double> x0 = gammas;
        x0.insert(x0.end(), betas.begin(), betas.end());
        const Objective objective = [&](const std::vector<double>& x) {
            return expectation(evolve(table, schedule_from_flat(x)), table);
        };
        const ObjectiveTrace trace =
            local_minimize(objective, x0, budget_per_level, kRefineOptions);
        eval_count += trace.eval_count;

        const Schedule best = schedule_from_flat(trace.best_params);
        gammas = interp_extend(best.gammas);
        betas = interp_extend(best.betas);
    }
    // The loop leaves depth-(p+1) vectors; keep the first p entries.
    gammas.resize(p);
    betas.resize(p);
    return finish_report("interp", instance, table, Schedule{gammas, betas},
                         eval_count, start);
}

StrategyReport run_fourier(const IsingInstance& instance, int p, int k,
                           int budget_per_level) {
    if (p < 1 || k < 1) throw std::invalid_argument("depth and k must be >= 1");
    if (budget_per_level < 1) throw std::invalid_argument("budget must be positive");
    const auto start = Clock::now();
    const CostTable table = build_cost_table(instance);

    FourierCoeffs coeffs;
    int eval_count = 0;
    for (int level = 1; level <= k; ++level) {
        coeffs.u.push_back(0.0);
        coeffs.v.push_back(0.0);
        std::vector<double> x0 = coeffs.u;
        x0.insert(x0.end(), coeffs.v.begin(), coeffs.v.end());

        const Objective objective = [&](const std::vector<double>& x) {
            FourierCoeffs fc;
            fc.u.assign(x.begin(), x.begin() + level);
            fc.v.assign(x.begin() + level, x.end());
            return expectation(evolve(table, fourier_to_schedule(fc, p)), table);
        };
        const ObjectiveTrace trace =
            local_minimize(objective, x0, budget_per_level, kRefineOptions);
        eval_count += trace.eval_count;
        coeffs.u.assign(trace.best_params.begin(), trace.best_params.begin() + level);
        coeffs.v.assign(trace.best_params.begin() + level, trace.best_params.end());
    }
    return finish_report("fourier", instance, table, fourier_to_schedule(coeffs, p),
                         eval_count, start);
}

LinearParams linxfer_train(const IsingInstance& instance, int p, int trials,
                           std::uint64_t seed) {
    if (p < 1) throw std::invalid_argument("depth must be >= 1");
    const CostTable table = build_cost_table(instance);
    const Objective objective = [&](const std::vector<double>& x) {
        const LinearParams lp{x[0], x[1], x[2], x[3]};
        return expectation(evolve(table, linear_schedule(lp, p)), table);
    };
    const std::vector<std::pair<double, double>> bounds(4, {-2.0, 2.0});
    const ObjectiveTrace trace = global_minimize(objective, bounds, trials, seed);
    return {trace.best_params[0], trace.best_params[1], trace.best_params[2],
            trace.best_params[3]};
}

StrategyReport linxfer_apply(const LinearParams& lp, const IsingInstance& instance,
                             int p, const TransferOptions& options) {
    if (p < 1) throw std::invalid_argument("depth must be >= 1");
    const auto start = Clock::now();
    const Schedule schedule = linear_schedule(lp, p);

    const CostTable table = build_cost_table(instance);
    double expect = 0.0;
    if (options.normalize) {
        const double e_ref =
            options.e_ref ? *options.e_ref
                          : simulated_annealing(instance, AnnealSettings{},
                                                options.anneal_seed)
                                .energy;
        const double factor = normalization_factor(instance, *options.normalize, e_ref);
        const IsingInstance normalized = scale_instance(instance, 1.0 / factor);
        const CostTable normalized_table = build_cost_table(normalized);
        // Evolve at the normalized scale, report at the original one.
        const StateVector state = evolve(normalized_table, schedule);
        expect = expectation(state, table);
    } else {
        expect = expectation(evolve(table, schedule), table);
    }

    StrategyReport report;
    report.name = "linxfer";
    report.schedule = schedule;
    report.expectation = expect;
    report.e_ref = options.e_ref ? *options.e_ref : reference_energy(instance);
    report.ratio = report.expectation / report.e_ref;
    report.eval_count = 0;  // transfer is free; the evaluation above is reporting
    report.wall_seconds = seconds_since(start);
    return report;
}

}  // namespace qaoa
