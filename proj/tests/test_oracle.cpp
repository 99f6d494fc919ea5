#include <doctest.h>

#include <stdexcept>

#include "qaoa/oracle.hpp"

using namespace qaoa;

TEST_CASE("brute force on tiny instances") {
    const IsingInstance single{2, {{0, 1, 1.0}}, 0.0, "single"};
    const GroundTruth gt = brute_force_min(single);
    CHECK(gt.energy == doctest::Approx(-1.0));
    CHECK(gt.degeneracy == 2);
    CHECK(energy(single, gt.config) == doctest::Approx(gt.energy).epsilon(1e-12));

    const IsingInstance triangle = gen_maxcut(3, 1.0, 0);
    const GroundTruth cut = brute_force_min(triangle);
    CHECK(cut.energy == doctest::Approx(-2.0));
    CHECK(cut.degeneracy == 6);

    IsingInstance k4{4, {}, 0.0, "k4"};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.edges.push_back({i, j, 1.0});
    const GroundTruth bal = brute_force_min(k4);
    CHECK(bal.energy == doctest::Approx(-2.0));
    CHECK(bal.degeneracy == 6);  // balanced bipartitions of 4 vertices
}

TEST_CASE("brute force tie-breaking is lexicographic and cap is enforced") {
    const IsingInstance single{2, {{0, 1, 1.0}}, 0.0, "single"};
    const GroundTruth gt = brute_force_min(single);
    // minimizers are 01 and 10; "01" is lexicographically smaller
    CHECK(gt.config[0] == 1);
    CHECK(gt.config[1] == -1);

    const IsingInstance big = gen_random_ising(12, 0.5, 1);
    CHECK_THROWS_AS(brute_force_min(big, 10), std::invalid_argument);
}

TEST_CASE("simulated annealing solves the single edge and is deterministic") {
    const IsingInstance single{2, {{0, 1, 1.0}}, 0.0, "single"};
    const GroundTruth a = simulated_annealing(single, 50, 2, 3);
    CHECK(a.energy == doctest::Approx(-1.0));

    const IsingInstance inst = gen_random_ising(10, 0.5, 40);
    const GroundTruth b = simulated_annealing(inst, 200, 4, 5);
    const GroundTruth c = simulated_annealing(inst, 200, 4, 5);
    CHECK(b.energy == c.energy);
    CHECK(b.config == c.config);
    CHECK(energy(inst, b.config) == doctest::Approx(b.energy).epsilon(1e-12));
}

TEST_CASE("annealing matches the exhaustive oracle on small instances") {
    int hits = 0;
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        const IsingInstance inst = gen_random_ising(16, 0.6, 100 + seed);
        const GroundTruth exact = brute_force_min(inst);
        const GroundTruth sa = simulated_annealing(inst, 1000, 16, seed);
        CHECK(sa.energy >= exact.energy - 1e-9);  // never below the exact minimum
        if (sa.energy <= exact.energy + 1e-9) ++hits;
    }
    CHECK(hits >= 7);
}

TEST_CASE("annealing best energy is non-increasing in restarts") {
    const IsingInstance inst = gen_random_ising(14, 0.5, 77);
    double previous = 1e300;
    for (int restarts = 1; restarts <= 8; restarts *= 2) {
        const GroundTruth gt = simulated_annealing(inst, 300, restarts, 9);
        CHECK(gt.energy <= previous + 1e-12);
        previous = gt.energy;
    }
}

TEST_CASE("reference energy picks the exhaustive oracle under the cap") {
    const IsingInstance inst = gen_random_ising(10, 0.5, 3);
    CHECK(reference_energy(inst) ==
          doctest::Approx(brute_force_min(inst).energy).epsilon(1e-12));
}
