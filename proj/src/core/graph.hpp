#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sqz {

struct Edge {
  int i = 0;
  int j = 0;
  double weight = 1.0;
};

// Undirected weighted graph; edges stored with i < j, no duplicates, no
// self-loops.
struct WeightedGraph {
  int n = 0;
  std::vector<Edge> edges;
};

// Energy over spin configurations z in {-1,+1}^n:
//   E(z) = sum_{i<j} J_ij z_i z_j + sum_i h_i z_i + offset.
// Bit b of a configuration index is x_b in {0,1} with z_b = 1 - 2 x_b.
struct IsingModel {
  int n = 0;
  std::vector<Edge> couplings;  // J_ij on (i, j), i < j
  std::vector<double> fields;   // h_i, length n
  double offset = 0.0;
};

WeightedGraph complete_graph(int n, double weight = 1.0);

void validate(const WeightedGraph& graph);

/// Parses the edge-list format: header line `n <count>`, then one
/// `i j weight` triple per line. Whitespace is lenient, indices are not.
WeightedGraph parse_edge_list(const std::string& text);

std::string format_edge_list(const WeightedGraph& graph);

/// Total weight of edges crossing the bipartition given by the bitstring
/// (bit b = side of node b). Bitstring length must equal graph.n.
double cut_value(std::uint64_t bits, const WeightedGraph& graph);

/// MaxCut -> Ising: J_ij = w_ij/2, h = 0, offset = -sum(w)/2, so that
/// E(z) = -cut(z) exactly and minimizing E maximizes the cut.
IsingModel maxcut_ising(const WeightedGraph& graph);

/// QUBO min x^T Sigma x -> Ising via x_i = (1 - z_i)/2. Exact algebraic
/// mapping; objective values agree bitwise on every configuration.
IsingModel qubo_to_ising(const std::vector<std::vector<double>>& sigma);

double ising_energy(const IsingModel& model, std::uint64_t bits);

double qubo_objective(const std::vector<std::vector<double>>& sigma, std::uint64_t bits);

}  // namespace sqz
