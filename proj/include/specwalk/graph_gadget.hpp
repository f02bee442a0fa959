// The +/-1/0 -> 0/1 reduction: every -1 entry of a signed symmetric
// matrix becomes a bit-flip block, every +1 an identity block,
//
//   A~ = sum_ij gamma_ij (x) |i><j|,   gamma = sigma_x for -1, 1 for +1,
//
// with interleaved vertex ordering (sign bit fastest): source index j
// owns the vertex pair (2j, 2j+1), and v -> v xor 1 is an automorphism
// exchanging every pair.  On the antisymmetric pair combination the
// doubled graph reproduces the signed matrix, which turns diagonal
// entries of A^m into differences of walk counts:
//
//   (A^m)_jj = (A~^m)_qq - (A~^m)_qr = Delta^m_qr,  q = 2j, r = 2j+1.
//
// Walk counts are integers and are computed here by an integer dynamic
// program over the adjacency oracle, independent of matrix_power, so the
// identity can be asserted exactly.

#pragma once

#include "specwalk/graph.hpp"
#include "specwalk/linalg.hpp"
#include "specwalk/phase_estimation.hpp"
#include "specwalk/sparse.hpp"

#include <optional>
#include <vector>

namespace specwalk {

// Sparse symmetric matrix whose explicit values are all +/-1.
class SignedSparseMatrix {
 public:
  explicit SignedSparseMatrix(SparseSymmetricMatrix matrix, bool clock_derived = false);

  const SparseSymmetricMatrix& matrix() const { return matrix_; }
  Index dim() const { return matrix_.dim(); }
  bool clock_derived() const { return clock_derived_; }

 private:
  SparseSymmetricMatrix matrix_;
  bool clock_derived_;
};

struct GadgetGraph {
  RegularGraph graph;          // dimension 2N, degree = source row sparsity
  Permutation pair_exchange;   // v -> v xor 1

  Index source_dim = 0;
  std::pair<Index, Index> pair_of(Index j) const { return {2 * j, 2 * j + 1}; }
};

GadgetGraph signed_to_adjacency(const SignedSparseMatrix& a);

// Materializes the gadget and checks the direct-sum decomposition
// A~ = P- (x) A + P+ (x) (A*A)  with A*A the entrywise square, plus the
// induced spectrum and norm identities.
struct DirectSumReport {
  double max_entry_deviation = 0.0;   // exact 0 expected
  double spectrum_deviation = 0.0;    // eig(A~) vs eig(A) u eig(A*A)
  double norm_gadget = 0.0;
  double norm_expected = 0.0;  // max(||A||, ||A*A||)
  bool ok(double eig_tol = 1e-9) const {
    return max_entry_deviation == 0.0 && spectrum_deviation <= eig_tol &&
           std::abs(norm_gadget - norm_expected) <= eig_tol;
  }
};
DirectSumReport direct_sum_check(const SignedSparseMatrix& a);

// Exact integer walk-count difference Delta^m_qr by dynamic programming
// over the adjacency oracle; throws on int64 overflow.
std::int64_t path_difference_exact(const RegularGraph& graph, Index q, Index r, Index m);

// All walk counts (A~^m e_q) for one source vertex.
std::vector<std::int64_t> walk_counts(const RegularGraph& graph, Index q, Index m);

struct ReductionIdentityReport {
  bool identity_holds = false;     // (A^n)_jj == Delta^n exactly, n = 0..m
  Index first_mismatch = -1;
  bool growth_bound_holds = false;  // |Delta^n|^{1/n} <= ||A|| + 1e-9, n <= 12
  double matrix_norm = 0.0;
  bool ok() const { return identity_holds && growth_bound_holds; }
};
ReductionIdentityReport verify_reduction_identity(const SignedSparseMatrix& a, Index j,
                                                  Index m);

struct PathDifferenceInstance {
  RegularGraph graph;
  Index q = 0;
  Index r = 1;
  Index m = 1;
  double g = 0.0;
  double epsilon = 0.0;
  double growth_bound = 0.0;  // b with b >= sup_n |Delta^n|^{1/n}
  Permutation automorphism;   // must exchange q and r
};

enum class PathVerdict { ge, le, promise_violated };

struct PathDecision {
  PathVerdict verdict = PathVerdict::promise_violated;
  double estimate = 0.0;  // Delta^m (exact integer in exact mode)
  Method method = Method::exact;
  std::optional<EstimateResult> budget;  // quantum-sim only
};

// Decides Delta^m_qr >= g + eps b^m versus <= g - eps b^m.  Exact mode
// detects promise violations; sampling mode returns its best decision
// with error budget below eps b^m, correct with probability >= 1 - alpha.
PathDecision decide_path_difference(const PathDifferenceInstance& instance,
                                    Method method, std::uint64_t seed = 0,
                                    const MeasureOptions& opts = {});

}  // namespace specwalk
