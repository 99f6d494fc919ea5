#include "qaoa/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qaoa/rng.hpp"

namespace qaoa {

namespace {

// Energies for all 2^n basis states, per-edge accumulation.
std::vector<double> enumerate_energies(const IsingInstance& instance) {
    const std::size_t dim = std::size_t{1} << instance.n_qubits;
    std::vector<double> energies(dim, instance.offset);
    for (const Edge& edge : instance.edges) {
        const std::uint64_t mask =
            (std::uint64_t{1} << edge.i) | (std::uint64_t{1} << edge.j);
        for (std::size_t z = 0; z < dim; ++z) {
            // s_i * s_j = +1 when bits i and j agree.
            const bool differ = __builtin_popcountll(z & mask) == 1;
            energies[z] += differ ? -edge.coupling : edge.coupling;
        }
    }
    return energies;
}

// Integer whose ordering matches lexicographic bitstring order
// (qubit 0 printed leftmost).
std::uint64_t lex_key(std::uint64_t z, int n_qubits) {
    std::uint64_t key = 0;
    for (int q = 0; q < n_qubits; ++q)
        key = (key << 1) | ((z >> q) & 1u);
    return key;
}

}  // namespace

GroundTruth brute_force_min(const IsingInstance& instance, int max_qubits) {
    validate(instance);
    if (instance.n_qubits > max_qubits)
        throw std::invalid_argument("instance exceeds the brute-force qubit cap");

    const std::vector<double> energies = enumerate_energies(instance);
    std::uint64_t best = 0;
    std::uint64_t degeneracy = 1;
    for (std::uint64_t z = 1; z < energies.size(); ++z) {
        if (energies[z] < energies[best]) {
            best = z;
            degeneracy = 1;
        } else if (energies[z] == energies[best]) {
            ++degeneracy;
            if (lex_key(z, instance.n_qubits) < lex_key(best, instance.n_qubits))
                best = z;
        }
    }

    GroundTruth gt;
    gt.energy = energies[best];
    gt.config = spins_from_basis(best, instance.n_qubits);
    gt.method = GroundTruth::Method::exhaustive;
    gt.degeneracy = degeneracy;
    return gt;
}

GroundTruth simulated_annealing(const IsingInstance& instance, int sweeps,
                                int restarts, std::uint64_t seed) {
    AnnealSettings settings;
    settings.sweeps = sweeps;
    settings.restarts = restarts;
    return simulated_annealing(instance, settings, seed);
}

GroundTruth simulated_annealing(const IsingInstance& instance,
                                const AnnealSettings& settings, std::uint64_t seed) {
    validate(instance);
    if (settings.sweeps < 1 || settings.restarts < 1)
        throw std::invalid_argument("sweeps and restarts must be positive");

    const int n = instance.n_qubits;
    // Adjacency lists for O(degree) local-field updates.
    std::vector<std::vector<std::pair<int, double>>> neighbors(n);
    double abs_sum = 0.0;
    for (const Edge& edge : instance.edges) {
        neighbors[edge.i].push_back({edge.j, edge.coupling});
        neighbors[edge.j].push_back({edge.i, edge.coupling});
        abs_sum += std::abs(edge.coupling);
    }
    const double t_hot = 2.0 * abs_sum / static_cast<double>(instance.edges.size());
    const double t_cold = settings.t_cold;
    const double decay =
        settings.sweeps > 1
            ? std::pow(t_cold / t_hot, 1.0 / static_cast<double>(settings.sweeps - 1))
            : 1.0;

    double best_energy = 0.0;
    SpinConfig best_config;
    bool have_best = false;

    for (int restart = 0; restart < settings.restarts; ++restart) {
        // Per-restart stream: restart results do not depend on how many
        // restarts are requested in total.
        Rng rng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(restart + 1));

        SpinConfig spins(n);
        for (int q = 0; q < n; ++q) spins[q] = rng.uniform() < 0.5 ? 1 : -1;
        double current = energy(instance, spins);
        double restart_best = current;
        SpinConfig restart_best_config = spins;

        double temperature = t_hot;
        for (int sweep = 0; sweep < settings.sweeps; ++sweep) {
            for (int attempt = 0; attempt < n; ++attempt) {
                const int site = static_cast<int>(rng.below(n));
                double local = 0.0;
                for (auto [other, coupling] : neighbors[site])
                    local += coupling * spins[other];
                const double delta = -2.0 * spins[site] * local;
                if (delta <= 0.0 || rng.uniform() < std::exp(-delta / temperature)) {
                    spins[site] = -spins[site];
                    current += delta;
                    if (current < restart_best) {
                        restart_best = current;
                        restart_best_config = spins;
                    }
                }
            }
            temperature *= decay;
        }

        if (!have_best || restart_best < best_energy ||
            (restart_best == best_energy &&
             restart_best_config < best_config)) {
            best_energy = restart_best;
            best_config = restart_best_config;
            have_best = true;
        }
    }

    GroundTruth gt;
    gt.energy = energy(instance, best_config);  // recompute, no drift
    gt.config = best_config;
    gt.method = GroundTruth::Method::annealing;
    gt.degeneracy = 1;
    return gt;
}

double reference_energy(const IsingInstance& instance, std::uint64_t seed,
                        int max_exhaustive_qubits) {
    if (instance.n_qubits <= max_exhaustive_qubits)
        return brute_force_min(instance, max_exhaustive_qubits).energy;
    return simulated_annealing(instance, AnnealSettings{}, seed).energy;
}

}  // namespace qaoa
