#include "qaoa/instance.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qaoa/rng.hpp"

namespace qaoa {

void validate(const IsingInstance& instance) {
    if (instance.n_qubits < 2)
        throw std::invalid_argument("instance needs at least 2 qubits");
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : instance.edges) {
        if (!(0 <= e.i && e.i < e.j && e.j < instance.n_qubits))
            throw std::invalid_argument("edge endpoints must satisfy 0 <= i < j < n_qubits");
        if (!seen.insert({e.i, e.j}).second)
            throw std::invalid_argument("duplicate edge");
        if (!std::isfinite(e.coupling) || e.coupling == 0.0)
            throw std::invalid_argument("couplings must be finite and nonzero");
    }
    if (instance.edges.empty())
        throw std::invalid_argument("instance has no edges");
    if (!std::isfinite(instance.offset))
        throw std::invalid_argument("offset must be finite");
}

namespace {

// Uniform random subset of round(d_edges * C(n,2)) vertex pairs: shuffle all
// pairs with the seeded generator, take a prefix, restore canonical order.
std::vector<std::pair<int, int>> random_edge_set(int n_qubits, double d_edges,
                                                 Rng& rng) {
    if (n_qubits < 2) throw std::invalid_argument("n_qubits must be >= 2");
    if (!(d_edges > 0.0 && d_edges <= 1.0))
        throw std::invalid_argument("d_edges must lie in (0, 1]");
    const std::size_t all = static_cast<std::size_t>(n_qubits) * (n_qubits - 1) / 2;
    const std::size_t count =
        static_cast<std::size_t>(std::floor(d_edges * static_cast<double>(all) + 0.5));
    if (count == 0) throw std::invalid_argument("edge count rounds to zero");

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(all);
    for (int i = 0; i < n_qubits; ++i)
        for (int j = i + 1; j < n_qubits; ++j) pairs.emplace_back(i, j);
    rng.shuffle(pairs);
    pairs.resize(count);
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

}  // namespace

IsingInstance gen_random_ising(int n_qubits, double d_edges, std::uint64_t seed) {
    Rng rng(seed);
    IsingInstance instance;
    instance.n_qubits = n_qubits;
    for (auto [i, j] : random_edge_set(n_qubits, d_edges, rng))
        instance.edges.push_back({i, j, rng.uniform() < 0.5 ? 1.0 : -1.0});
    instance.offset = 0.0;
    instance.label = "random-ising n=" + std::to_string(n_qubits) +
                     " d=" + std::to_string(d_edges) + " seed=" + std::to_string(seed);
    return instance;
}

IsingInstance gen_maxcut(int n_qubits, double d_edges, std::uint64_t seed) {
    Rng rng(seed);
    IsingInstance instance;
    instance.n_qubits = n_qubits;
    for (auto [i, j] : random_edge_set(n_qubits, d_edges, rng))
        instance.edges.push_back({i, j, 0.5});
    instance.offset = -0.5 * static_cast<double>(instance.edges.size());
    instance.label = "maxcut n=" + std::to_string(n_qubits) +
                     " d=" + std::to_string(d_edges) + " seed=" + std::to_string(seed);
    return instance;
}

IsingInstance gen_sk(int n_qubits, double variance, std::uint64_t seed) {
    if (n_qubits < 2) throw std::invalid_argument("n_qubits must be >= 2");
    if (!(variance > 0.0) || !std::isfinite(variance))
        throw std::invalid_argument("variance must be positive");
    Rng rng(seed);
    const double stddev = std::sqrt(variance);
    IsingInstance instance;
    instance.n_qubits = n_qubits;
    for (int i = 0; i < n_qubits; ++i)
        for (int j = i + 1; j < n_qubits; ++j) {
            double coupling = rng.normal(0.0, stddev);
            while (coupling == 0.0) coupling = rng.normal(0.0, stddev);
            instance.edges.push_back({i, j, coupling});
        }
    instance.offset = 0.0;
    instance.label = "sk n=" + std::to_string(n_qubits) +
                     " var=" + std::to_string(variance) + " seed=" + std::to_string(seed);
    return instance;
}

double energy(const IsingInstance& instance, const SpinConfig& config) {
    if (static_cast<int>(config.size()) != instance.n_qubits)
        throw std::invalid_argument("config length does not match instance");
    double e = instance.offset;
    for (const Edge& edge : instance.edges)
        e += edge.coupling * config[edge.i] * config[edge.j];
    return e;
}

IsingInstance scale_instance(const IsingInstance& instance, double factor) {
    if (!(factor > 0.0) || !std::isfinite(factor))
        throw std::invalid_argument("scale factor must be positive and finite");
    IsingInstance scaled = instance;
    for (Edge& edge : scaled.edges) edge.coupling *= factor;
    scaled.offset *= factor;
    return scaled;
}

double edge_density(const IsingInstance& instance) {
    if (instance.n_qubits < 2)
        throw std::invalid_argument("edge density needs n_qubits >= 2");
    const double all = static_cast<double>(instance.n_qubits) *
                       (instance.n_qubits - 1) / 2.0;
    return static_cast<double>(instance.edges.size()) / all;
}

double normalization_factor(const IsingInstance& instance, NormalizationMode mode,
                            double e_ref) {
    if (!(e_ref < 0.0))
        throw std::invalid_argument("reference energy must be negative");
    if (instance.edges.empty())
        throw std::invalid_argument("instance has no edges");
    switch (mode.kind) {
        case NormalizationMode::Kind::fixed_x:
            if (!(mode.x > 0.0))
                throw std::invalid_argument("X must be positive");
            return std::abs(e_ref) / mode.x;
        case NormalizationMode::Kind::sqrt_edges:
            return std::abs(e_ref) /
                   std::sqrt(static_cast<double>(instance.edges.size()));
    }
    throw std::invalid_argument("unknown normalization mode");
}

SpinConfig spins_from_basis(std::uint64_t z, int n_qubits) {
    SpinConfig spins(n_qubits);
    for (int q = 0; q < n_qubits; ++q)
        spins[q] = ((z >> q) & 1u) ? -1 : 1;
    return spins;
}

std::string bitstring_from_basis(std::uint64_t z, int n_qubits) {
    std::string bits(n_qubits, '0');
    for (int q = 0; q < n_qubits; ++q)
        if ((z >> q) & 1u) bits[q] = '1';
    return bits;
}

std::uint64_t basis_from_bitstring(const std::string& bits) {
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] == '1')
            z |= (std::uint64_t{1} << q);
        else if (bits[q] != '0')
            throw std::invalid_argument("bitstring must contain only 0/1");
    }
    return z;
}

}  // namespace qaoa
