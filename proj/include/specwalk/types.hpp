// Shared scalar/matrix aliases and numeric tolerances.
//
// Everything in the library is built on dense Eigen types; sparse
// instances are function-backed oracles that materialize into these
// when the dimension permits.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <cstdlib>

namespace specwalk {

using Index = std::int64_t;
using Complex = std::complex<double>;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RMat = Mat<double>;
using CMat = Mat<Complex>;
using IMat = Mat<std::int64_t>;
using RVec = Vec<double>;
using CVec = Vec<Complex>;
using IVec = Vec<std::int64_t>;

namespace tol {
// Per-entry Hermiticity check on dense matrices.
inline constexpr double hermitian = 1e-12;
// Eigendecomposition residuals: reconstruction scales with dimension.
inline constexpr double eig_reconstruct = 1e-9;
inline constexpr double eig_orthonormal = 1e-10;
// Degeneracy binning for spectral measures, relative to spectral diameter.
inline constexpr double degeneracy = 1e-8;
// Unitarity residual for imaginary-mode exponentials.
inline constexpr double unitarity = 1e-9;
// State normalization.
inline constexpr double unit_norm = 1e-10;
// Entries of a floating matrix counted as exact integers.
inline constexpr double integer_entry = 1e-12;
// Total mass of a probability distribution.
inline constexpr double prob_mass = 1e-9;
}  // namespace tol

// Decision problems run either on the exact linear-algebra path or on the
// simulated phase-estimation measurement path.
enum class Method { exact, quantum_sim };

// Dense materialization cap.  Oracles stay lazy above the cap; only
// operations that need the dense matrix are refused.
Index dense_cap();

// Overrides the cap for the current process (SPECWALK_DENSE_CAP wins at
// first use; this is for tests and embedding).
void set_dense_cap(Index cap);

}  // namespace specwalk
