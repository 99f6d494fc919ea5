#pragma once

#include <cstdint>

#include "qaoa/instance.hpp"

namespace qaoa {

struct GroundTruth {
    double energy = 0.0;
    SpinConfig config;
    enum class Method { exhaustive, annealing } method = Method::exhaustive;
    std::uint64_t degeneracy = 1;  // exhaustive only
};

// Exhaustive scan of all 2^n configurations. Ties between minimizers are
// broken by lexicographically smallest bitstring; degeneracy counts the
// exact minimizers.
GroundTruth brute_force_min(const IsingInstance& instance, int max_qubits = 24);

struct AnnealSettings {
    int sweeps = 1000;
    int restarts = 16;
    double t_cold = 0.01;
};

// Single-spin-flip Metropolis with a geometric temperature ladder from
// T_hot = 2 * mean|J| down to t_cold, restarted from fresh random
// configurations; best result across restarts. Deterministic for fixed seed,
// and restart k sees the same stream regardless of the total restart count.
GroundTruth simulated_annealing(const IsingInstance& instance, int sweeps,
                                int restarts, std::uint64_t seed);
GroundTruth simulated_annealing(const IsingInstance& instance,
                                const AnnealSettings& settings, std::uint64_t seed);

// E_ref used in approximation ratios: exhaustive minimum when the instance
// fits under the brute-force cap, otherwise the annealing estimate.
double reference_energy(const IsingInstance& instance, std::uint64_t seed = 0,
                        int max_exhaustive_qubits = 24);

}  // namespace qaoa
