#include "specwalk/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace specwalk {

RegularGraph::RegularGraph(Index dim, Index degree, NeighborOracle oracle)
    : dim_(dim), degree_(degree), oracle_(std::move(oracle)) {
  if (dim <= 0) throw std::invalid_argument("graph: dimension must be positive");
  if (degree <= 0) throw std::invalid_argument("graph: degree must be positive");
}

RegularGraph RegularGraph::from_lists(Index degree,
                                      std::vector<std::vector<Index>> lists) {
  const Index n = static_cast<Index>(lists.size());
  RegularGraph g(n, degree, NeighborOracle{});
  for (Index v = 0; v < n; ++v) {
    const auto& row = lists[static_cast<std::size_t>(v)];
    if (static_cast<Index>(row.size()) != degree)
      throw std::invalid_argument("graph: vertex " + std::to_string(v) +
                                  " has row sum " + std::to_string(row.size()) +
                                  ", expected degree " + std::to_string(degree));
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] < 0 || row[k] >= n)
        throw std::invalid_argument("graph: neighbor out of range");
      if (k > 0 && row[k] <= row[k - 1])
        throw std::invalid_argument("graph: neighbor list of " + std::to_string(v) +
                                    " not strictly sorted");
    }
  }
  for (Index v = 0; v < n; ++v)
    for (Index u : lists[static_cast<std::size_t>(v)]) {
      const auto& back = lists[static_cast<std::size_t>(u)];
      if (!std::binary_search(back.begin(), back.end(), v))
        throw std::invalid_argument("graph: edge (" + std::to_string(v) + "," +
                                    std::to_string(u) + ") not symmetric");
    }
  g.lists_ = std::move(lists);
  return g;
}

std::vector<Index> RegularGraph::neighbors(Index v) const {
  if (v < 0 || v >= dim_) throw std::out_of_range("graph: vertex index");
  if (is_explicit()) return lists_[static_cast<std::size_t>(v)];
  return oracle_(v);
}

SparseSymmetricMatrix RegularGraph::adjacency() const {
  auto self = *this;
  return SparseSymmetricMatrix(
      dim_,
      [self](Index v) {
        SparseRow row;
        for (Index u : self.neighbors(v)) row.push_back({u, 1.0});
        return row;
      },
      degree_, static_cast<double>(degree_));
}

RegularGraph RegularGraph::materialized() const {
  if (is_explicit()) return *this;
  std::vector<std::vector<Index>> lists;
  lists.reserve(static_cast<std::size_t>(dim_));
  for (Index v = 0; v < dim_; ++v) lists.push_back(neighbors(v));
  return from_lists(degree_, std::move(lists));
}

void Permutation::validate() const {
  const Index n = dim();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (Index v = 0; v < n; ++v) {
    const Index w = image[static_cast<std::size_t>(v)];
    if (w < 0 || w >= n || seen[static_cast<std::size_t>(w)])
      throw std::invalid_argument("permutation: not a bijection");
    seen[static_cast<std::size_t>(w)] = true;
  }
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.image.assign(image.size(), 0);
  for (Index v = 0; v < dim(); ++v) inv.image[static_cast<std::size_t>((*this)(v))] = v;
  return inv;
}

Permutation Permutation::identity(Index n) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) p.image[static_cast<std::size_t>(v)] = v;
  return p;
}

Permutation Permutation::pair_swap(Index n) {
  if (n % 2 != 0) throw std::invalid_argument("pair_swap: dimension must be even");
  Permutation p = identity(n);
  for (Index v = 0; v < n; ++v) p.image[static_cast<std::size_t>(v)] = v ^ 1;
  return p;
}

Permutation Permutation::transposition(Index n, Index a, Index b) {
  Permutation p = identity(n);
  std::swap(p.image[static_cast<std::size_t>(a)], p.image[static_cast<std::size_t>(b)]);
  return p;
}

bool is_graph_automorphism(const RegularGraph& g, const Permutation& perm) {
  if (perm.dim() != g.dim()) return false;
  perm.validate();
  for (Index v = 0; v < g.dim(); ++v) {
    std::vector<Index> mapped;
    for (Index u : g.neighbors(v)) mapped.push_back(perm(u));
    std::sort(mapped.begin(), mapped.end());
    if (mapped != g.neighbors(perm(v))) return false;
  }
  return true;
}

RegularGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::string tag;
  Index n = 0, degree = 0;
  in >> tag >> n >> degree;
  if (tag != "graph" || n <= 0 || degree <= 0)
    throw std::runtime_error("graph file: bad header in " + path);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<Index>> lists(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v) {
    if (!std::getline(in, line))
      throw std::runtime_error("graph file: missing adjacency line for vertex " +
                               std::to_string(v));
    std::istringstream ls(line);
    std::string head;
    ls >> head;
    if (head != std::to_string(v) + ":")
      throw std::runtime_error("graph file: bad vertex header '" + head + "'");
    Index u;
    while (ls >> u) lists[static_cast<std::size_t>(v)].push_back(u);
  }
  return RegularGraph::from_lists(degree, std::move(lists));
}

void save_graph(const RegularGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file: " + path);
  out << "graph " << g.dim() << " " << g.degree() << "\n";
  for (Index v = 0; v < g.dim(); ++v) {
    out << v << ":";
    for (Index u : g.neighbors(v)) out << " " << u;
    out << "\n";
  }
}

Permutation load_permutation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open permutation file: " + path);
  std::string tag;
  Index n = 0;
  in >> tag >> n;
  if (tag != "perm" || n <= 0)
    throw std::runtime_error("permutation file: bad header in " + path);
  Permutation p;
  p.image.resize(static_cast<std::size_t>(n));
  for (Index v = 0; v < n; ++v)
    if (!(in >> p.image[static_cast<std::size_t>(v)]))
      throw std::runtime_error("permutation file: truncated");
  p.validate();
  return p;
}

void save_permutation(const Permutation& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write permutation file: " + path);
  out << "perm " << p.dim() << "\n";
  for (Index v = 0; v < p.dim(); ++v) out << p.image[static_cast<std::size_t>(v)] << "\n";
}

}  // namespace specwalk
