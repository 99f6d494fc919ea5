#include "qaoa/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "qaoa/rng.hpp"

namespace qaoa {

double StateVector::norm_squared() const {
    double total = 0.0;
    for (const auto& amp : amplitudes) total += std::norm(amp);
    return total;
}

CostTable build_cost_table(const IsingInstance& instance, int max_qubits) {
    validate(instance);
    if (instance.n_qubits > max_qubits)
        throw std::invalid_argument("instance exceeds the simulator qubit cap");

    CostTable table;
    table.n_qubits = instance.n_qubits;
    const std::size_t dim = std::size_t{1} << instance.n_qubits;
    table.values.assign(dim, instance.offset);
    for (const Edge& edge : instance.edges) {
        const std::uint64_t mask =
            (std::uint64_t{1} << edge.i) | (std::uint64_t{1} << edge.j);
        for (std::size_t z = 0; z < dim; ++z) {
            const bool differ = __builtin_popcountll(z & mask) == 1;
            table.values[z] += differ ? -edge.coupling : edge.coupling;
        }
    }

    // Distinct-value index, abandoned if the spectrum is effectively dense.
    const std::size_t max_distinct = std::min<std::size_t>(dim, 4096);
    std::unordered_map<double, std::uint32_t> ids;
    ids.reserve(max_distinct * 2);
    table.distinct_index.resize(dim);
    for (std::size_t z = 0; z < dim; ++z) {
        auto [it, inserted] = ids.try_emplace(
            table.values[z], static_cast<std::uint32_t>(table.distinct.size()));
        if (inserted) {
            if (table.distinct.size() >= max_distinct) {
                table.distinct.clear();
                table.distinct_index.clear();
                return table;
            }
            table.distinct.push_back(table.values[z]);
        }
        table.distinct_index[z] = it->second;
    }
    return table;
}

namespace {

void apply_phase_layer(StateVector& state, const CostTable& table, double gamma) {
    const std::size_t dim = state.amplitudes.size();
    if (!table.distinct.empty()) {
        std::vector<std::complex<double>> lut(table.distinct.size());
        for (std::size_t k = 0; k < lut.size(); ++k) {
            const double phase = -gamma * table.distinct[k];
            lut[k] = {std::cos(phase), std::sin(phase)};
        }
        for (std::size_t z = 0; z < dim; ++z)
            state.amplitudes[z] *= lut[table.distinct_index[z]];
    } else {
        for (std::size_t z = 0; z < dim; ++z) {
            const double phase = -gamma * table.values[z];
            state.amplitudes[z] *= std::complex<double>{std::cos(phase), std::sin(phase)};
        }
    }
}

// exp(-i beta X) on every qubit: 2x2 kernel [[c, -is], [-is, c]].
void apply_mixer_layer(StateVector& state, double beta) {
    const double c = std::cos(beta);
    const std::complex<double> ms{0.0, -std::sin(beta)};
    const std::size_t dim = state.amplitudes.size();
    auto* amps = state.amplitudes.data();
    for (int q = 0; q < state.n_qubits; ++q) {
        const std::size_t bit = std::size_t{1} << q;
        for (std::size_t base = 0; base < dim; base += 2 * bit) {
            for (std::size_t low = 0; low < bit; ++low) {
                const std::size_t z0 = base + low;
                const std::size_t z1 = z0 + bit;
                const std::complex<double> a = amps[z0];
                const std::complex<double> b = amps[z1];
                amps[z0] = c * a + ms * b;
                amps[z1] = ms * a + c * b;
            }
        }
    }
}

}  // namespace

StateVector evolve(const CostTable& table, const Schedule& schedule) {
    if (schedule.gammas.size() != schedule.betas.size())
        throw std::invalid_argument("schedule vectors must have equal length");
    StateVector state;
    state.n_qubits = table.n_qubits;
    const std::size_t dim = table.dim();
    const double amp0 = 1.0 / std::sqrt(static_cast<double>(dim));
    state.amplitudes.assign(dim, std::complex<double>{amp0, 0.0});

    for (int l = 0; l < schedule.depth(); ++l) {
        apply_phase_layer(state, table, schedule.gammas[l]);
        apply_mixer_layer(state, schedule.betas[l]);
    }
    return state;
}

double expectation(const StateVector& state, const CostTable& table) {
    if (state.amplitudes.size() != table.dim())
        throw std::invalid_argument("state and cost table dimensions differ");
    double value = 0.0;
    for (std::size_t z = 0; z < table.dim(); ++z)
        value += std::norm(state.amplitudes[z]) * table.values[z];
    return value;
}

SampleSet sample(const StateVector& state, int shots, std::uint64_t seed,
                 const CostTable& table) {
    if (shots < 1) throw std::invalid_argument("shots must be positive");
    if (state.amplitudes.size() != table.dim())
        throw std::invalid_argument("state and cost table dimensions differ");
    const double norm = state.norm_squared();
    if (std::abs(norm - 1.0) > 1e-6)
        throw std::invalid_argument("state is not normalized");

    const std::size_t dim = state.amplitudes.size();
    std::vector<double> cumulative(dim);
    double running = 0.0;
    for (std::size_t z = 0; z < dim; ++z) {
        running += std::norm(state.amplitudes[z]);
        cumulative[z] = running;
    }

    Rng rng(seed);
    std::vector<int> counts;
    std::unordered_map<std::uint64_t, int> hits;
    hits.reserve(static_cast<std::size_t>(shots));
    for (int shot = 0; shot < shots; ++shot) {
        const double u = rng.uniform() * running;
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u);
        const std::uint64_t z = static_cast<std::uint64_t>(
            std::min<std::size_t>(it - cumulative.begin(), dim - 1));
        ++hits[z];
    }

    std::vector<std::uint64_t> keys;
    keys.reserve(hits.size());
    for (const auto& [z, count] : hits) keys.push_back(z);
    std::sort(keys.begin(), keys.end());

    SampleSet samples;
    samples.shots = shots;
    double sum = 0.0;
    double best = table.values[keys.front()];
    for (std::uint64_t z : keys) {
        const int count = hits[z];
        const double e = table.values[z];
        samples.records.push_back({bitstring_from_basis(z, table.n_qubits), count, e});
        sum += count * e;
        best = std::min(best, e);
    }
    samples.mean_energy = sum / shots;
    samples.best_energy = best;
    return samples;
}

void write_sample_csv(const SampleSet& samples, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << "bitstring,count,energy\n";
    out.precision(17);
    for (const SampleRecord& record : samples.records)
        out << record.bitstring << ',' << record.count << ',' << record.energy << '\n';
}

}  // namespace qaoa
