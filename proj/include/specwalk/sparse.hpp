// Oracle-style sparse symmetric matrices.
//
// A SparseSymmetricMatrix is specified by a row oracle: a function that
// returns the nonzero (column, value) pairs of a row, sorted by column.
// Instances carry a row-sparsity bound and an a priori operator-norm
// bound.  Explicit matrices are stored row-wise and expose the same
// oracle interface; function-backed instances stay lazy and are only
// materialized below the dense cap.

#pragma once

#include "specwalk/types.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace specwalk {

struct SparseEntry {
  Index col = 0;
  double value = 0.0;
};

using SparseRow = std::vector<SparseEntry>;
using RowOracle = std::function<SparseRow(Index)>;

class SparseSymmetricMatrix {
 public:
  // Function-backed oracle.  Rows must come back sorted by column.
  SparseSymmetricMatrix(Index dim, RowOracle oracle, Index max_row_nonzeros,
                        double norm_bound);

  // Explicit matrix from upper-triangle triplets (i <= j).  The lower
  // triangle is mirrored; duplicates are rejected.
  static SparseSymmetricMatrix from_triplets(
      Index dim, const std::vector<std::tuple<Index, Index, double>>& upper,
      double norm_bound = 0.0);

  static SparseSymmetricMatrix from_dense(const RMat& a, double norm_bound = 0.0);

  Index dim() const { return dim_; }
  Index max_row_nonzeros() const { return max_row_nonzeros_; }
  double norm_bound() const { return norm_bound_; }
  bool is_explicit() const { return !rows_.empty() || dim_ == 0; }

  // Row oracle.  Entries sorted by column; zeros omitted.
  SparseRow row(Index i) const;

  // True when every stored/emitted value is an exact small integer.
  bool integer_entries() const;

  // y = A x through the oracle, never materializing the matrix.
  RVec apply(const RVec& x) const;

 private:
  Index dim_;
  RowOracle oracle_;                  // empty for explicit matrices
  std::vector<SparseRow> rows_;       // explicit storage
  Index max_row_nonzeros_;
  double norm_bound_;
};

// Line-oriented text format:
//   symmetric <N>
//   i j value        (one upper-triangle nonzero per line, 0-indexed)
// Writers emit entries sorted by (i, j).
SparseSymmetricMatrix load_symmetric_matrix(const std::string& path);
void save_symmetric_matrix(const SparseSymmetricMatrix& m, const std::string& path);

}  // namespace specwalk
