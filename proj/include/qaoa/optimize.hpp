#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qaoa {

using Objective = std::function<double(const std::vector<double>&)>;

struct ObjectiveTrace {
    std::vector<std::pair<std::vector<double>, double>> evaluations;
    std::vector<double> best_params;
    double best_value = 0.0;
    int eval_count = 0;
    bool aborted = false;  // set when the objective returned a non-finite value

    void record(const std::vector<double>& params, double value);
};

enum class LocalMethod {
    cobyla,       // linear-approximation trust region (Powell's COBYLA)
    nelder_mead,  // adaptive simplex
};

struct LocalOptions {
    LocalMethod method = LocalMethod::cobyla;
    double initial_radius = 1.0;     // COBYLA starting trust-region radius
    double initial_step = 0.1;       // Nelder-Mead per-coordinate simplex offset
    double convergence_radius = 1e-6;
};

// Derivative-free local descent. The default method models the objective by
// linear interpolation at dim+1 points and takes trust-region steps, shrinking
// the radius from initial_radius to convergence_radius (Powell's COBYLA,
// unconstrained); an adaptive Nelder-Mead simplex is also available. Stops at
// budget exhaustion or when the trust radius / simplex diameter falls below
// the convergence radius. A non-finite objective value aborts with the trace
// so far flagged.
ObjectiveTrace local_minimize(const Objective& objective,
                              const std::vector<double>& x0, int budget,
                              const LocalOptions& options = {});

// Sampler-based global search inside a box: a quasi-random startup phase of
// max(16, trials/10) points followed by a density-ratio guided phase that
// concentrates sampling near low observed values. Exactly `trials`
// evaluations; deterministic for fixed seed.
ObjectiveTrace global_minimize(const Objective& objective,
                               const std::vector<std::pair<double, double>>& bounds,
                               int trials, std::uint64_t seed);

// One {"params": [...], "value": ...} line per evaluation.
void write_trace_jsonl(const ObjectiveTrace& trace, const std::string& path);

}  // namespace qaoa
