// Exact numerical backbone: dense Hermitian matrices, eigendecomposition,
// matrix powers (with an exact-integer path), matrix exponentials, and
// spectral measures.  Everything here is the brute-force oracle the rest
// of the library is checked against, so the contracts are strict: the
// eigendecomposition validates its own residuals and spectral measures
// must carry unit mass.

#pragma once

#include "specwalk/sparse.hpp"
#include "specwalk/types.hpp"

#include <vector>

namespace specwalk {

// Dense Hermitian matrix.  Hermiticity is checked entrywise at
// construction (tolerance tol::hermitian, absolute).
class DenseHermitian {
 public:
  explicit DenseHermitian(CMat entries);
  explicit DenseHermitian(const RMat& real_symmetric);

  Index dim() const { return entries_.rows(); }
  const CMat& entries() const { return entries_; }

  bool is_real() const;
  // True when every entry is a real integer (within tol::integer_entry).
  bool integer_entries() const;
  RMat real_part() const { return entries_.real(); }
  IMat rounded_int() const;

 private:
  CMat entries_;
};

// Ascending eigenvalues with orthonormal eigenvector columns.
// Construction verifies  ||A - Q diag(l) Q*||_F <= 1e-9 * dim  and
// ||Q*Q - I||_F <= 1e-10.
struct EigenSystem {
  RVec eigenvalues;
  CMat eigenvectors;
};

// Finite spectral measure: ascending support values with weights.
struct SpectralMeasure {
  std::vector<double> values;
  std::vector<double> weights;

  double total_mass() const;
  // m-th moment, sum of value^m * weight.
  double moment(Index m) const;
  // Drops support points with weight below the threshold.
  SpectralMeasure pruned(double weight_tol = 1e-12) const;
  // Support values multiplied by a scale factor (weights unchanged).
  SpectralMeasure scaled(double factor) const;
};

// Largest |support difference| + |weight difference| over matched points;
// throws if the pruned supports have different sizes.
double measure_distance(const SpectralMeasure& a, const SpectralMeasure& b,
                        double weight_tol = 1e-12);

// Materializes a sparse oracle into a dense matrix.  Verifies symmetry of
// the emitted entries and rejects dimensions above the dense cap.
DenseHermitian materialize(const SparseSymmetricMatrix& m);

// Checks the materialized operator norm against the instance's bound.
bool verify_norm_bound(const SparseSymmetricMatrix& m, double slack = 1e-9);

// Dense eigendecomposition (the oracle all spectral claims reduce to).
EigenSystem eig(const DenseHermitian& h);

// h^m by repeated squaring.  When all entries are integers the product is
// carried in 64-bit integer arithmetic and overflow raises; otherwise the
// floating path is used.
DenseHermitian matrix_power(const DenseHermitian& h, Index m);

// Exact integer power of an integer matrix; throws on int64 overflow.
IMat matrix_power_int(const IMat& a, Index m);

// exp(scale * h), Hermitian for real scale.  Computed as Q exp(scale L) Q*.
DenseHermitian matrix_exp(const DenseHermitian& h, double scale);
DenseHermitian matrix_exp(const EigenSystem& es, double scale);

// exp(i * scale * h), unitary.  Verifies the unitarity residual.
CMat matrix_exp_unitary(const DenseHermitian& h, double scale);
CMat matrix_exp_unitary(const EigenSystem& es, double scale);

// Spectral measure induced by a unit state: weights <psi|Q_j|psi> with
// degenerate eigenvalues grouped at tol::degeneracy relative to the
// spectral diameter.
SpectralMeasure project_state(const EigenSystem& es, const CVec& psi);

// <psi| f(A) |psi> over the eigendecomposition; f evaluated per eigenvalue.
double spectral_expectation(const EigenSystem& es, const CVec& psi,
                            const std::function<double(double)>& f);

// Operator (2-)norm.
double operator_norm(const DenseHermitian& h);
double operator_norm(const CMat& a);

}  // namespace specwalk
