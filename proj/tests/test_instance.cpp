#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <set>

#include "qaoa/instance.hpp"

using namespace qaoa;

namespace {

// Independent enumeration of every spin configuration at small n.
double brute_min_by_enumeration(const IsingInstance& instance) {
    const int n = instance.n_qubits;
    double best = 1e300;
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << n); ++z)
        best = std::min(best, energy(instance, spins_from_basis(z, n)));
    return best;
}

}  // namespace

TEST_CASE("random ising edge count and determinism") {
    const IsingInstance a = gen_random_ising(16, 0.6, 7);
    CHECK(a.edges.size() == 72);  // round(0.6 * 120)
    for (const Edge& e : a.edges) CHECK(std::abs(e.coupling) == 1.0);

    const IsingInstance b = gen_random_ising(16, 0.6, 7);
    REQUIRE(a.edges.size() == b.edges.size());
    for (std::size_t k = 0; k < a.edges.size(); ++k) {
        CHECK(a.edges[k].i == b.edges[k].i);
        CHECK(a.edges[k].j == b.edges[k].j);
        CHECK(a.edges[k].coupling == b.edges[k].coupling);
    }

    const IsingInstance c = gen_random_ising(4, 1.0, 3);
    CHECK(c.edges.size() == 6);

    // edge subset is duplicate-free and in range
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : a.edges) {
        CHECK(0 <= e.i);
        CHECK(e.i < e.j);
        CHECK(e.j < 16);
        CHECK(seen.insert({e.i, e.j}).second);
    }
}

TEST_CASE("generator argument validation") {
    CHECK_THROWS_AS(gen_random_ising(1, 0.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_ising(8, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_ising(8, 1.5, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_random_ising(16, 0.001, 0), std::invalid_argument);  // rounds to 0
    CHECK_THROWS_AS(gen_sk(4, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_sk(4, -1.0, 0), std::invalid_argument);
}

TEST_CASE("maxcut energies match the cut formulation") {
    const IsingInstance triangle = gen_maxcut(3, 1.0, 0);
    CHECK(triangle.edges.size() == 3);
    CHECK(triangle.offset == doctest::Approx(-1.5));

    // enumerate all 8 configurations: minimum is -2 (cut size 2)
    CHECK(brute_min_by_enumeration(triangle) == doctest::Approx(-2.0));
    CHECK(energy(triangle, {1, 1, -1}) == doctest::Approx(-2.0));
    CHECK(energy(triangle, {1, 1, 1}) == doctest::Approx(0.0));

    const IsingInstance big = gen_maxcut(16, 0.6, 11);
    CHECK(big.offset == doctest::Approx(-36.0));
    // energy is always in [-|E|, 0] and equals minus the cut size
    for (std::uint64_t z = 0; z < 64; ++z) {
        const double e = energy(big, spins_from_basis(z * 541 % 65536, 16));
        CHECK(e <= 1e-12);
        CHECK(e >= -static_cast<double>(big.edges.size()) - 1e-12);
        CHECK(std::abs(e - std::round(e)) < 1e-12);
    }
}

TEST_CASE("sk generator") {
    const IsingInstance sk = gen_sk(9, 4.0 / 9.0, 5);
    CHECK(sk.edges.size() == 36);
    double mean = 0.0;
    for (const Edge& e : sk.edges) mean += e.coupling / 36.0;
    double var = 0.0;
    for (const Edge& e : sk.edges) var += (e.coupling - mean) * (e.coupling - mean) / 35.0;
    CHECK(var > 0.2);
    CHECK(var < 0.9);

    CHECK(gen_sk(2, 1.0, 0).edges.size() == 1);

    const IsingInstance again = gen_sk(9, 4.0 / 9.0, 5);
    for (std::size_t k = 0; k < sk.edges.size(); ++k)
        CHECK(sk.edges[k].coupling == again.edges[k].coupling);
}

TEST_CASE("energy basics") {
    IsingInstance single{2, {{0, 1, 1.0}}, 0.0, "single"};
    CHECK(energy(single, {1, 1}) == doctest::Approx(1.0));
    CHECK(energy(single, {1, -1}) == doctest::Approx(-1.0));
    CHECK_THROWS_AS(energy(single, {1, 1, 1}), std::invalid_argument);

    // K4, all J=+1, balanced bipartition: (M^2 - n)/2 with M = 0
    IsingInstance k4{4, {}, 0.0, "k4"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.edges.push_back({i, j, 1.0});
    CHECK(energy(k4, {1, 1, -1, -1}) == doctest::Approx(-2.0));
    CHECK(brute_min_by_enumeration(k4) == doctest::Approx(-2.0));
}

TEST_CASE("global spin-flip symmetry of the two-body part") {
    const IsingInstance inst = gen_random_ising(10, 0.5, 21);
    for (std::uint64_t z = 0; z < 32; ++z) {
        SpinConfig s = spins_from_basis(z * 997 % 1024, 10);
        SpinConfig flipped = s;
        for (int& v : flipped) v = -v;
        CHECK(energy(inst, s) - inst.offset ==
              doctest::Approx(energy(inst, flipped) - inst.offset).epsilon(1e-14));
    }
}

TEST_CASE("scale_instance linearity") {
    const IsingInstance inst = gen_random_ising(8, 0.7, 2);
    const IsingInstance doubled = scale_instance(inst, 2.0);
    const IsingInstance recovered = scale_instance(scale_instance(inst, 0.5), 2.0);
    for (std::uint64_t z = 0; z < 256; ++z) {
        const SpinConfig s = spins_from_basis(z, 8);
        CHECK(energy(doubled, s) == doctest::Approx(2.0 * energy(inst, s)).epsilon(1e-12));
        CHECK(energy(recovered, s) == doctest::Approx(energy(inst, s)).epsilon(1e-12));
    }
    CHECK_THROWS_AS(scale_instance(inst, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(scale_instance(inst, -2.0), std::invalid_argument);

    const IsingInstance same = scale_instance(inst, 1.0);
    for (std::size_t k = 0; k < inst.edges.size(); ++k)
        CHECK(same.edges[k].coupling == inst.edges[k].coupling);
}

TEST_CASE("normalization factor") {
    const IsingInstance inst = gen_random_ising(16, 0.6, 7);
    CHECK(normalization_factor(inst, NormalizationMode::fixed_x(8.0), -16.0) ==
          doctest::Approx(2.0));

    IsingInstance wide{32, {}, 0.0, "n32"};
    for (int i = 0, added = 0; i < 32 && added < 298; ++i)
        for (int j = i + 1; j < 32 && added < 298; ++j, ++added)
            wide.edges.push_back({i, j, 1.0});
    REQUIRE(wide.edges.size() == 298);
    CHECK(normalization_factor(wide, NormalizationMode::sqrt_edges(), -103.0) ==
          doctest::Approx(103.0 / std::sqrt(298.0)).epsilon(1e-12));
    CHECK(normalization_factor(wide, NormalizationMode::sqrt_edges(),
                               -std::sqrt(298.0)) == doctest::Approx(1.0));

    CHECK_THROWS_AS(normalization_factor(inst, NormalizationMode::sqrt_edges(), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(normalization_factor(inst, NormalizationMode::sqrt_edges(), 0.0),
                    std::invalid_argument);
}

TEST_CASE("edge density") {
    IsingInstance k4{4, {}, 0.0, "k4"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.edges.push_back({i, j, 1.0});
    CHECK(edge_density(k4) == doctest::Approx(1.0));
    CHECK(edge_density(gen_random_ising(16, 0.6, 7)) == doctest::Approx(0.6));
    IsingInstance pair{2, {{0, 1, 1.0}}, 0.0, ""};
    CHECK(edge_density(pair) == doctest::Approx(1.0));
}

TEST_CASE("bitstring conventions round-trip") {
    CHECK(bitstring_from_basis(0b01, 4) == "1000");  // qubit 0 leftmost
    CHECK(basis_from_bitstring("1000") == 1);
    for (std::uint64_t z = 0; z < 64; ++z)
        CHECK(basis_from_bitstring(bitstring_from_basis(z, 6)) == z);
    const SpinConfig s = spins_from_basis(0b101, 3);
    CHECK(s[0] == -1);
    CHECK(s[1] == 1);
    CHECK(s[2] == -1);
}
