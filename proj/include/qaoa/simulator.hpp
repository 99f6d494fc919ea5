#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qaoa/instance.hpp"
#include "qaoa/schedule.hpp"

namespace qaoa {

// Diagonal cost operator: values[z] = energy of the spin configuration of
// basis state z (qubit 0 = least significant bit, bit b -> spin 1-2b).
//
// When the instance takes few distinct energies (integer couplings), the
// table also stores a distinct-value index so the phase layer can reuse one
// complex exponential per distinct energy.
struct CostTable {
    int n_qubits = 0;
    std::vector<double> values;
    std::vector<double> distinct;        // empty when not exploited
    std::vector<std::uint32_t> distinct_index;

    std::size_t dim() const { return values.size(); }
};

struct StateVector {
    int n_qubits = 0;
    std::vector<std::complex<double>> amplitudes;

    double norm_squared() const;
};

struct SampleRecord {
    std::string bitstring;
    int count = 0;
    double energy = 0.0;
};

struct SampleSet {
    int shots = 0;
    std::vector<SampleRecord> records;  // sorted by basis index
    double mean_energy = 0.0;
    double best_energy = 0.0;
};

CostTable build_cost_table(const IsingInstance& instance, int max_qubits = 24);

// Applies p layers of exp(-i gamma_l C) followed by exp(-i beta_l X) on every
// qubit, starting from the uniform superposition. exp(-i beta X) is the
// rotation-X gate with angle 2*beta; the phase layer of each l acts first.
StateVector evolve(const CostTable& table, const Schedule& schedule);

double expectation(const StateVector& state, const CostTable& table);

// Born-rule sampling; deterministic for fixed seed. Rejects states whose
// norm deviates from 1 by more than 1e-6.
SampleSet sample(const StateVector& state, int shots, std::uint64_t seed,
                 const CostTable& table);

void write_sample_csv(const SampleSet& samples, const std::string& path);

}  // namespace qaoa
