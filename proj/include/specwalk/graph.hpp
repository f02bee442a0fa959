// Regular graphs as neighbor-list oracles, with the self-loop convention
// used throughout: a self-loop appears once in its own neighbor list and
// contributes 1 to the adjacency diagonal and to the row sum, so
// "degree d" means every row sums to d.

#pragma once

#include "specwalk/sparse.hpp"
#include "specwalk/types.hpp"

#include <functional>
#include <string>
#include <vector>

namespace specwalk {

using NeighborOracle = std::function<std::vector<Index>(Index)>;

class RegularGraph {
 public:
  // Empty placeholder; any access throws.  Real graphs come from the
  // oracle constructor or from_lists.
  RegularGraph() = default;
  RegularGraph(Index dim, Index degree, NeighborOracle oracle);

  // Explicit lists; validates sortedness, symmetry and regularity.
  static RegularGraph from_lists(Index degree, std::vector<std::vector<Index>> lists);

  Index dim() const { return dim_; }
  Index degree() const { return degree_; }
  bool is_explicit() const { return !lists_.empty(); }

  // Sorted neighbor list (self-loops listed once).
  std::vector<Index> neighbors(Index v) const;

  // 0/1 adjacency as a sparse symmetric oracle; norm bound = degree.
  SparseSymmetricMatrix adjacency() const;

  // Materializes the oracle into explicit lists (no cap: linear storage).
  RegularGraph materialized() const;

 private:
  Index dim_ = 0;
  Index degree_ = 0;
  NeighborOracle oracle_;
  std::vector<std::vector<Index>> lists_;
};

struct Permutation {
  std::vector<Index> image;

  Index dim() const { return static_cast<Index>(image.size()); }
  Index operator()(Index v) const { return image[static_cast<std::size_t>(v)]; }
  void validate() const;
  Permutation inverse() const;

  static Permutation identity(Index n);
  // v <-> v xor 1: exchanges every pair (2j, 2j+1).
  static Permutation pair_swap(Index n);
  static Permutation transposition(Index n, Index a, Index b);
};

// True iff relabeling by perm leaves every adjacency list fixed.
bool is_graph_automorphism(const RegularGraph& g, const Permutation& perm);

// Graph text format:
//   graph <N> <degree>
//   u: v1 v2 ...        (sorted, one line per vertex)
RegularGraph load_graph(const std::string& path);
void save_graph(const RegularGraph& g, const std::string& path);

// Permutation text format:  perm <N>  followed by one image per line.
Permutation load_permutation(const std::string& path);
void save_permutation(const Permutation& p, const std::string& path);

}  // namespace specwalk
