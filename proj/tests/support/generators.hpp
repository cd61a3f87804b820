#pragma once

#include <cmath>
#include <complex>

#include "core/graph.hpp"
#include "core/qaoa_params.hpp"
#include "core/rng.hpp"
#include "core/symmetric_state.hpp"

namespace sqz::testgen {

constexpr double kPi = 3.141592653589793238463;
constexpr double kTwoPi = 6.283185307179586476925;

inline SymmetricState random_state(CounterRng& rng, int n) {
  SymmetricState state{n, std::vector<std::complex<double>>(n + 1)};
  double norm2 = 0.0;
  for (int m = 0; m <= n; ++m) {
    state.amps[m] = {rng.next_uniform(-1.0, 1.0), rng.next_uniform(-1.0, 1.0)};
    norm2 += std::norm(state.amps[m]);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : state.amps) a *= scale;
  return state;
}

inline QaoaParams random_schedule(CounterRng& rng, int depth) {
  QaoaParams params;
  for (int k = 0; k < depth; ++k) {
    params.gammas.push_back(rng.next_uniform(0.0, kTwoPi));
    params.betas.push_back(rng.next_uniform(0.0, kPi));
  }
  return params;
}

// connected enough for cut tests: random edge subset with integer weights,
// at least one edge
inline WeightedGraph random_int_graph(CounterRng& rng, int n) {
  WeightedGraph graph{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.next_double() < 0.6)
        graph.edges.push_back({i, j, double(1 + int(rng.next_double() * 5))});
  if (graph.edges.empty() && n >= 2) graph.edges.push_back({0, 1, 1.0});
  return graph;
}

}  // namespace sqz::testgen
