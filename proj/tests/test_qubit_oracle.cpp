#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>

#include "core/full_state.hpp"
#include "core/graph.hpp"
#include "core/qaoa.hpp"
#include "core/rng.hpp"
#include "support/generators.hpp"
#include "support/invariants.hpp"

using namespace sqz;

TEST_CASE("maxcut to Ising mapping") {
  SUBCASE("complete unweighted n=4") {
    const IsingModel model = maxcut_ising(complete_graph(4));
    CHECK(model.couplings.size() == 6);
    for (const auto& c : model.couplings) CHECK(c.weight == doctest::Approx(0.5));
    CHECK(model.offset == doctest::Approx(-3.0));
    for (double h : model.fields) CHECK(h == 0.0);
  }
  SUBCASE("single edge: ground energy -1") {
    WeightedGraph graph{2, {{0, 1, 1.0}}};
    const IsingModel model = maxcut_ising(graph);
    double ground = 1e300;
    for (std::uint64_t bits = 0; bits < 4; ++bits)
      ground = std::min(ground, ising_energy(model, bits));
    CHECK(ground == doctest::Approx(-1.0));
  }
  SUBCASE("unit triangle: ground energy -2 by brute force") {
    const IsingModel model = maxcut_ising(complete_graph(3));
    double ground = 1e300;
    for (std::uint64_t bits = 0; bits < 8; ++bits)
      ground = std::min(ground, ising_energy(model, bits));
    CHECK(ground == doctest::Approx(-2.0));
  }
}

TEST_CASE("qubo to Ising mapping") {
  SUBCASE("zero matrix maps to the zero model") {
    const IsingModel model = qubo_to_ising({{0.0, 0.0}, {0.0, 0.0}});
    CHECK(model.couplings.empty());
    CHECK(model.offset == 0.0);
    for (double h : model.fields) CHECK(h == 0.0);
  }
  SUBCASE("1x1 [1]: h = -1/2, offset = 1/2") {
    const IsingModel model = qubo_to_ising({{1.0}});
    CHECK(model.fields[0] == doctest::Approx(-0.5));
    CHECK(model.offset == doctest::Approx(0.5));
  }
  SUBCASE("random 3x3: objective equality on all 8 bitstrings") {
    CounterRng rng(21);
    std::vector<std::vector<double>> sigma(3, std::vector<double>(3));
    for (auto& row : sigma)
      for (auto& v : row) v = rng.next_uniform(-2.0, 2.0);
    const IsingModel model = qubo_to_ising(sigma);
    for (std::uint64_t bits = 0; bits < 8; ++bits)
      CHECK(ising_energy(model, bits) ==
            doctest::Approx(qubo_objective(sigma, bits)).epsilon(1e-12));
  }
  SUBCASE("non-square rejected") {
    CHECK_THROWS_AS(qubo_to_ising({{1.0, 2.0}}), std::invalid_argument);
  }
}

TEST_CASE("cut value") {
  const WeightedGraph complete4 = complete_graph(4);
  CHECK(cut_value(0b0000, complete4) == 0.0);
  CHECK(cut_value(0b0011, complete4) == doctest::Approx(4.0));

  CounterRng rng(22);
  const WeightedGraph graph = testgen::random_int_graph(rng, 6);
  const IsingModel model = maxcut_ising(graph);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint64_t bits = rng.next_u64() & 0x3f;
    CHECK(cut_value(bits, graph) == doctest::Approx(-ising_energy(model, bits)));
  }
  CHECK_THROWS_AS(cut_value(1u << 5, complete4), std::invalid_argument);
}

TEST_CASE("edge-list format") {
  SUBCASE("parse and round trip") {
    const std::string text = "n 4\n0 1 1.0\n  0   2\t2.5\n1 3 -0.5\n";
    const WeightedGraph graph = parse_edge_list(text);
    CHECK(graph.n == 4);
    REQUIRE(graph.edges.size() == 3);
    CHECK(graph.edges[1].weight == doctest::Approx(2.5));
    const WeightedGraph again = parse_edge_list(format_edge_list(graph));
    CHECK(again.edges.size() == graph.edges.size());
    CHECK(again.edges[2].weight == graph.edges[2].weight);
  }
  SUBCASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list("0 1 1.0\n"), std::invalid_argument);        // no header
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 0 1.0\n"), std::invalid_argument);   // self loop
    CHECK_THROWS_AS(parse_edge_list("n 3\n1 0 1.0\n"), std::invalid_argument);   // i >= j
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 5 1.0\n"), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 x\n"), std::invalid_argument);     // bad token
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 1\n0 1 2\n"), std::invalid_argument);  // dup
  }
}

TEST_CASE("uniform superposition and symmetric projection") {
  const FullState uniform = uniform_superposition(6);
  const SymmetricProjection proj = project_symmetric(uniform);
  CHECK(std::abs(proj.residual) < 1e-12);

  // |01> on two qubits: component 1/sqrt(2) on the m=1 Dicke state
  FullState single{2, {0.0, 0.0, 0.0, 0.0}};
  single.amps[0b01] = 1.0;  // qubit 0 in |1>, qubit 1 in |0>
  const SymmetricProjection part = project_symmetric(single);
  CHECK(std::abs(part.components.amps[1]) == doctest::Approx(std::sqrt(0.5)));
  CHECK(part.residual == doctest::Approx(0.5));

  CHECK_THROWS_AS(uniform_superposition(kFullStateQubitCap + 1), std::invalid_argument);
}

TEST_CASE("qaoa evolution against spin-core") {
  SUBCASE("all-zero schedule gives the uniform superposition") {
    const FullState state =
        evolve_qaoa_full(maxcut_ising(complete_graph(5)), QaoaParams{{0.0}, {0.0}});
    for (const auto& a : state.amps) {
      CHECK(a.real() == doctest::Approx(1.0 / std::sqrt(32.0)).epsilon(1e-12));
      CHECK(a.imag() == doctest::Approx(0.0).epsilon(1e-14));
    }
  }
  SUBCASE("complete graph n=6: projection matches spin-core") {
    const QaoaParams params{{0.73, 2.11}, {0.41, 1.37}};
    const SymmetricProjection proj =
        project_symmetric(evolve_qaoa_full(maxcut_ising(complete_graph(6)), params));
    CHECK(std::abs(proj.residual) < 1e-12);
    const SymmetricState direct = trial_state(6, params);
    const SymmetricState aligned = align_global_phase(direct, proj.components);
    for (int m = 0; m <= 6; ++m)
      CHECK(std::abs(aligned.amps[m] - proj.components.amps[m]) < 1e-9);
  }
  SUBCASE("n=12 caption schedule: energies agree across simulators") {
    const QaoaParams params{{0.199, 0.306, 4.592}, {0.127, 0.087, 1.518}};
    const FullState full = evolve_qaoa_full(maxcut_ising(complete_graph(12)), params);
    double energy = 0.0;
    for (std::size_t idx = 0; idx < full.amps.size(); ++idx)
      energy += std::norm(full.amps[idx]) * ising_energy(maxcut_ising(complete_graph(12)), idx);
    CHECK(energy == doctest::Approx(energy_expectation(trial_state(12, params))).epsilon(1e-9));
  }
}

TEST_CASE("bitstring sampling") {
  SUBCASE("basis state: every shot identical") {
    FullState basis{3, std::vector<std::complex<double>>(8, 0.0)};
    basis.amps[5] = 1.0;
    for (std::uint64_t draw : sample_bitstrings(basis, 100, 99)) CHECK(draw == 5);
  }
  SUBCASE("same seed twice: identical sample sets") {
    const FullState state = uniform_superposition(4);
    CHECK(sample_bitstrings(state, 500, 17) == sample_bitstrings(state, 500, 17));
    CHECK(sample_bitstrings(state, 500, 17) != sample_bitstrings(state, 500, 18));
  }
  SUBCASE("coherent n=4: Hamming-weight histogram matches the binomial") {
    const FullState state = uniform_superposition(4);
    const long shots = 100000;
    std::map<int, long> histogram;
    for (std::uint64_t draw : sample_bitstrings(state, shots, 4242))
      ++histogram[__builtin_popcountll(draw)];
    const double expected[5] = {1.0 / 16, 4.0 / 16, 6.0 / 16, 4.0 / 16, 1.0 / 16};
    double chi2 = 0.0;
    for (int w = 0; w <= 4; ++w) {
      const double want = shots * expected[w];
      const double got = double(histogram[w]);
      chi2 += (got - want) * (got - want) / want;
    }
    // chi-square critical value for df=4 at p = 0.001
    CHECK(chi2 < 18.467);
  }
  SUBCASE("shots must be positive") {
    CHECK_THROWS_AS(sample_bitstrings(uniform_superposition(2), 0, 1), std::invalid_argument);
  }
}

TEST_CASE("qubit-oracle invariant suites") {
  for (const auto& suite : {invariants::full_state_unitarity(200, 44),
                            invariants::symmetry_preservation(200, 44),
                            invariants::mapping_soundness(150, 44),
                            invariants::convention_lock(250, 44)}) {
    INFO(suite.name, ": ", suite.first_failure);
    CHECK(suite.failures == 0);
  }
}
