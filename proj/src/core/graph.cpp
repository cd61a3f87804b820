#include "core/graph.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace sqz {

WeightedGraph complete_graph(int n, double weight) {
  if (n < 1) throw std::invalid_argument("complete_graph: n must be >= 1");
  WeightedGraph graph{n, {}};
  graph.edges.reserve(std::size_t(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) graph.edges.push_back({i, j, weight});
  return graph;
}

void validate(const WeightedGraph& graph) {
  if (graph.n < 1) throw std::invalid_argument("graph must have at least one node");
  std::set<std::pair<int, int>> seen;
  for (const auto& e : graph.edges) {
    if (e.i == e.j) throw std::invalid_argument("self-loop on node " + std::to_string(e.i));
    if (e.i < 0 || e.j < 0 || e.i >= graph.n || e.j >= graph.n || e.i >= e.j)
      throw std::invalid_argument("edge indices must satisfy 0 <= i < j < n");
    if (!seen.insert({e.i, e.j}).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.i) + ", " +
                                  std::to_string(e.j) + ")");
  }
}

WeightedGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  WeightedGraph graph;
  bool have_header = false;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (!have_header) {
      if (first != "n")
        throw std::invalid_argument("line 1: expected header `n <count>`, got `" + first + "`");
      if (!(ls >> graph.n))
        throw std::invalid_argument("line 1: missing node count in header");
      have_header = true;
      continue;
    }
    Edge e;
    std::istringstream es(line);
    if (!(es >> e.i >> e.j >> e.weight))
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected `i j weight` triple, got `" + line + "`");
    graph.edges.push_back(e);
  }
  if (!have_header) throw std::invalid_argument("missing `n <count>` header");
  validate(graph);
  return graph;
}

std::string format_edge_list(const WeightedGraph& graph) {
  std::ostringstream out;
  out << "n " << graph.n << "\n";
  out.precision(17);
  for (const auto& e : graph.edges) out << e.i << " " << e.j << " " << e.weight << "\n";
  return out.str();
}

double cut_value(std::uint64_t bits, const WeightedGraph& graph) {
  validate(graph);
  if (graph.n < 64 && (bits >> graph.n) != 0)
    throw std::invalid_argument("bitstring longer than graph order");
  double cut = 0.0;
  for (const auto& e : graph.edges)
    if (((bits >> e.i) & 1u) != ((bits >> e.j) & 1u)) cut += e.weight;
  return cut;
}

IsingModel maxcut_ising(const WeightedGraph& graph) {
  validate(graph);
  IsingModel model{graph.n, {}, std::vector<double>(graph.n, 0.0), 0.0};
  model.couplings.reserve(graph.edges.size());
  for (const auto& e : graph.edges) {
    model.couplings.push_back({e.i, e.j, 0.5 * e.weight});
    model.offset -= 0.5 * e.weight;
  }
  return model;
}

IsingModel qubo_to_ising(const std::vector<std::vector<double>>& sigma) {
  const std::size_t n = sigma.size();
  if (n == 0) throw std::invalid_argument("qubo_to_ising: empty matrix");
  for (const auto& row : sigma)
    if (row.size() != n) throw std::invalid_argument("qubo_to_ising: matrix must be square");

  IsingModel model{int(n), {}, std::vector<double>(n, 0.0), 0.0};
  // x_i x_j = (1 - z_i - z_j + z_i z_j)/4 for i != j; x_i^2 = x_i = (1 - z_i)/2.
  for (std::size_t i = 0; i < n; ++i) {
    model.fields[i] -= 0.5 * sigma[i][i];
    model.offset += 0.5 * sigma[i][i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double s = sigma[i][j] + sigma[j][i];
      if (s != 0.0) model.couplings.push_back({int(i), int(j), 0.25 * s});
      model.fields[i] -= 0.25 * s;
      model.fields[j] -= 0.25 * s;
      model.offset += 0.25 * s;
    }
  }
  return model;
}

double ising_energy(const IsingModel& model, std::uint64_t bits) {
  auto z = [bits](int q) { return ((bits >> q) & 1u) ? -1.0 : 1.0; };
  double energy = model.offset;
  for (const auto& c : model.couplings) energy += c.weight * z(c.i) * z(c.j);
  for (int q = 0; q < model.n; ++q) energy += model.fields[q] * z(q);
  return energy;
}

double qubo_objective(const std::vector<std::vector<double>>& sigma, std::uint64_t bits) {
  const std::size_t n = sigma.size();
  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!((bits >> i) & 1u)) continue;
    for (std::size_t j = 0; j < n; ++j)
      if ((bits >> j) & 1u) value += sigma[i][j];
  }
  return value;
}

}  // namespace sqz
