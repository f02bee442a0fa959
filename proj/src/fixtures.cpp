#include "specwalk/fixtures.hpp"

#include "specwalk/rng.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace specwalk {

RegularGraph complete_graph(Index n) {
  if (n < 2) throw std::invalid_argument("complete_graph: n must be >= 2");
  std::vector<std::vector<Index>> lists(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v)
    for (Index u = 0; u < n; ++u)
      if (u != v) lists[static_cast<std::size_t>(v)].push_back(u);
  return RegularGraph::from_lists(n - 1, std::move(lists));
}

RegularGraph cycle_graph(Index n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
  std::vector<std::vector<Index>> lists(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) {
    std::vector<Index> nb{(v + n - 1) % n, (v + 1) % n};
    std::sort(nb.begin(), nb.end());
    lists[static_cast<std::size_t>(v)] = std::move(nb);
  }
  return RegularGraph::from_lists(2, std::move(lists));
}

Permutation cycle_reflection(Index n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v)
    p.image[static_cast<std::size_t>(v)] = ((1 - v) % n + n) % n;
  p.validate();
  return p;
}

RegularGraph random_regular_graph(Index n, Index degree, std::uint64_t seed) {
  if (degree >= n)
    throw std::invalid_argument("random_regular_graph: degree must be below n");
  if ((degree * n) % 2 != 0)
    throw std::invalid_argument("random_regular_graph: d*n must be even");
  Rng rng = Rng::stream(seed, 0x5247);  // fixture stream
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<Index> stubs;
    stubs.reserve(static_cast<std::size_t>(n * degree));
    for (Index v = 0; v < n; ++v)
      for (Index k = 0; k < degree; ++k) stubs.push_back(v);
    for (std::size_t i = stubs.size(); i > 1; --i)
      std::swap(stubs[i - 1], stubs[rng.next_below(i)]);

    std::set<std::pair<Index, Index>> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      Index u = stubs[i], v = stubs[i + 1];
      if (u == v) {
        ok = false;
        break;
      }
      auto e = std::minmax(u, v);
      if (!edges.insert({e.first, e.second}).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<std::vector<Index>> lists(static_cast<std::size_t>(n));
    for (const auto& [u, v] : edges) {
      lists[static_cast<std::size_t>(u)].push_back(v);
      lists[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& row : lists) std::sort(row.begin(), row.end());
    return RegularGraph::from_lists(degree, std::move(lists));
  }
  throw std::runtime_error("random_regular_graph: pairing model did not converge");
}

GateCircuit deterministic_circuit(int width, int gate_count,
                                  std::vector<int> input_bits) {
  if (width < 2) throw std::invalid_argument("deterministic_circuit: width must be >= 2");
  if (gate_count < 1)
    throw std::invalid_argument("deterministic_circuit: need at least one gate");
  GateCircuit y;
  y.width = width;
  y.input_bits = std::move(input_bits);
  for (int k = 0; k < gate_count; ++k) y.gates.push_back(Gate::h(1));
  y.validate();
  return y;
}

GateCircuit hadamard_involution(const GateCircuit& y) {
  y.validate();
  for (const Gate& g : y.gates)
    if (!g.two_sparse())
      throw std::invalid_argument("hadamard_involution: y must be Hadamard-kind only");
  GateCircuit u = y;
  u.gates.push_back(Gate::h(0));
  for (auto it = y.gates.rbegin(); it != y.gates.rend(); ++it)
    u.gates.push_back(it->adjoint());
  return u;
}

}  // namespace specwalk
