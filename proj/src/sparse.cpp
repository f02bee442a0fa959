#include "specwalk/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace specwalk {

namespace {
Index g_cap_override = -1;
}

Index dense_cap() {
  if (g_cap_override >= 0) return g_cap_override;
  if (const char* env = std::getenv("SPECWALK_DENSE_CAP")) {
    char* end = nullptr;
    long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) return static_cast<Index>(v);
  }
  return 4096;
}

void set_dense_cap(Index cap) { g_cap_override = cap; }

SparseSymmetricMatrix::SparseSymmetricMatrix(Index dim, RowOracle oracle,
                                             Index max_row_nonzeros,
                                             double norm_bound)
    : dim_(dim),
      oracle_(std::move(oracle)),
      max_row_nonzeros_(max_row_nonzeros),
      norm_bound_(norm_bound) {
  if (dim <= 0) throw std::invalid_argument("sparse matrix: dimension must be positive");
  if (max_row_nonzeros <= 0)
    throw std::invalid_argument("sparse matrix: max_row_nonzeros must be positive");
}

SparseSymmetricMatrix SparseSymmetricMatrix::from_triplets(
    Index dim, const std::vector<std::tuple<Index, Index, double>>& upper,
    double norm_bound) {
  std::vector<SparseRow> rows(static_cast<std::size_t>(dim));
  for (const auto& [i, j, v] : upper) {
    if (i < 0 || j < 0 || i >= dim || j >= dim)
      throw std::invalid_argument("sparse matrix: index out of range");
    if (i > j) throw std::invalid_argument("sparse matrix: triplets must be upper-triangle");
    if (v == 0.0) continue;
    rows[static_cast<std::size_t>(i)].push_back({j, v});
    if (i != j) rows[static_cast<std::size_t>(j)].push_back({i, v});
  }
  Index max_nnz = 1;
  for (Index i = 0; i < dim; ++i) {
    auto& r = rows[static_cast<std::size_t>(i)];
    std::sort(r.begin(), r.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.col < b.col; });
    for (std::size_t k = 1; k < r.size(); ++k)
      if (r[k].col == r[k - 1].col)
        throw std::invalid_argument("sparse matrix: duplicate entry in row " +
                                    std::to_string(i));
    max_nnz = std::max<Index>(max_nnz, static_cast<Index>(r.size()));
  }
  SparseSymmetricMatrix m(dim, RowOracle{}, max_nnz, norm_bound);
  m.rows_ = std::move(rows);
  return m;
}

SparseSymmetricMatrix SparseSymmetricMatrix::from_dense(const RMat& a,
                                                        double norm_bound) {
  if (a.rows() != a.cols()) throw std::invalid_argument("sparse matrix: not square");
  std::vector<std::tuple<Index, Index, double>> upper;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = i; j < a.cols(); ++j) {
      if (a(i, j) != a(j, i))
        throw std::invalid_argument("sparse matrix: dense input not symmetric");
      if (a(i, j) != 0.0) upper.emplace_back(i, j, a(i, j));
    }
  return from_triplets(a.rows(), upper, norm_bound);
}

SparseRow SparseSymmetricMatrix::row(Index i) const {
  if (i < 0 || i >= dim_) throw std::out_of_range("sparse matrix: row index");
  if (is_explicit()) return rows_[static_cast<std::size_t>(i)];
  SparseRow r = oracle_(i);
  for (std::size_t k = 1; k < r.size(); ++k)
    if (r[k].col <= r[k - 1].col)
      throw std::runtime_error("sparse oracle: row " + std::to_string(i) +
                               " not sorted or has duplicate columns");
  return r;
}

bool SparseSymmetricMatrix::integer_entries() const {
  for (Index i = 0; i < dim_; ++i)
    for (const auto& e : row(i))
      if (std::abs(e.value - std::round(e.value)) > tol::integer_entry) return false;
  return true;
}

RVec SparseSymmetricMatrix::apply(const RVec& x) const {
  if (x.size() != dim_) throw std::invalid_argument("sparse apply: size mismatch");
  RVec y = RVec::Zero(dim_);
  for (Index i = 0; i < dim_; ++i)
    for (const auto& e : row(i)) y[i] += e.value * x[e.col];
  return y;
}

SparseSymmetricMatrix load_symmetric_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matrix file: " + path);
  std::string tag;
  Index n = 0;
  in >> tag >> n;
  if (tag != "symmetric" || n <= 0)
    throw std::runtime_error("matrix file: bad header in " + path);
  std::vector<std::tuple<Index, Index, double>> upper;
  Index i, j;
  double v;
  while (in >> i >> j >> v) upper.emplace_back(i, j, v);
  return SparseSymmetricMatrix::from_triplets(n, upper);
}

void save_symmetric_matrix(const SparseSymmetricMatrix& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write matrix file: " + path);
  out << "symmetric " << m.dim() << "\n";
  out << std::setprecision(17);
  for (Index i = 0; i < m.dim(); ++i)
    for (const auto& e : m.row(i))
      if (e.col >= i) out << i << " " << e.col << " " << e.value << "\n";
}

}  // namespace specwalk
