#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qaoa {

struct Edge {
    int i = 0;
    int j = 0;
    double coupling = 0.0;
};

// Weighted coupling graph with a constant energy term.
//
// Energy of a spin configuration s (entries in {-1,+1}) is
//   offset + sum over edges of coupling * s_i * s_j.
// Max-cut instances live in the same representation: every edge carries
// coupling +1/2 and offset = -|E|/2, so the energy equals minus the cut size.
struct IsingInstance {
    int n_qubits = 0;
    std::vector<Edge> edges;     // i < j, no duplicates, couplings finite and nonzero
    double offset = 0.0;
    std::string label;
};

using SpinConfig = std::vector<int>;  // entries in {-1, +1}

// Throws std::invalid_argument if any structural invariant is violated.
void validate(const IsingInstance& instance);

// Random +/-1 couplings on a uniformly drawn edge subset of the requested
// density. Edge count is round(d_edges * C(n,2)), half-up.
IsingInstance gen_random_ising(int n_qubits, double d_edges, std::uint64_t seed);

// Same edge-set procedure; couplings +1/2 and offset -|E|/2, so the energy of
// a configuration equals minus the number of cut edges.
IsingInstance gen_maxcut(int n_qubits, double d_edges, std::uint64_t seed);

// Complete graph with couplings drawn from N(0, variance).
IsingInstance gen_sk(int n_qubits, double variance, std::uint64_t seed);

double energy(const IsingInstance& instance, const SpinConfig& config);

// Multiplies every coupling and the offset by `factor` (> 0, finite).
IsingInstance scale_instance(const IsingInstance& instance, double factor);

double edge_density(const IsingInstance& instance);

struct NormalizationMode {
    enum class Kind { fixed_x, sqrt_edges };
    Kind kind = Kind::sqrt_edges;
    double x = 1.0;  // used by fixed_x only

    static NormalizationMode fixed_x(double x) { return {Kind::fixed_x, x}; }
    static NormalizationMode sqrt_edges() { return {Kind::sqrt_edges, 1.0}; }
};

// |e_ref|/X or |e_ref|/sqrt(|E|); e_ref must be negative. The normalized
// instance is scale_instance(instance, 1/factor).
double normalization_factor(const IsingInstance& instance, NormalizationMode mode,
                            double e_ref);

// Basis-state conventions: qubit 0 is the least significant bit of the basis
// index; bit b maps to spin 1-2b; bitstrings print qubit 0 leftmost.
SpinConfig spins_from_basis(std::uint64_t z, int n_qubits);
std::string bitstring_from_basis(std::uint64_t z, int n_qubits);
std::uint64_t basis_from_bitstring(const std::string& bits);

}  // namespace qaoa
