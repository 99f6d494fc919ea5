#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "qaoa/instance.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/schedule.hpp"

namespace qaoa {

struct StrategyReport {
    std::string name;       // standard | interp | fourier | linxfer
    Schedule schedule;
    double expectation = 0.0;   // fresh re-evaluation of `schedule`
    double ratio = 0.0;         // expectation / e_ref
    double e_ref = 0.0;
    int eval_count = 0;         // objective evaluations spent on optimization
    double wall_seconds = 0.0;  // informational only
};

// Full 2p-dimensional optimization from the all-0.1 start.
StrategyReport run_standard(const IsingInstance& instance, int p, int budget = 1000);

// Layer-by-layer: optimize at depth i, then interpolate both angle vectors to
// depth i+1 as the next initialization; the final extension is truncated back
// to depth p. eval_count sums all levels.
StrategyReport run_interp(const IsingInstance& instance, int p,
                          int budget_per_level = 1000);

// Grows the Fourier coefficient vectors one term at a time (zero-appended
// initialization), optimizing the full-depth schedule through the Fourier
// transform at every level.
StrategyReport run_fourier(const IsingInstance& instance, int p, int k = 2,
                           int budget_per_level = 1000);

// Global search over the 4-dimensional linear-parameter box [-2, 2]^4.
LinearParams linxfer_train(const IsingInstance& instance, int p, int trials = 1024,
                           std::uint64_t seed = 0);

struct TransferOptions {
    std::optional<NormalizationMode> normalize;
    std::optional<double> e_ref;     // required info for normalized mode;
                                     // computed via simulated annealing when absent
    std::uint64_t anneal_seed = 0;
};

// Applies a pre-trained linear parameter point with zero optimization
// evaluations. In normalized mode the instance is rescaled by
// 1/normalization_factor before evolution and the reported expectation is
// de-normalized back to the original energy scale.
StrategyReport linxfer_apply(const LinearParams& lp, const IsingInstance& instance,
                             int p, const TransferOptions& options = {});

}  // namespace qaoa
