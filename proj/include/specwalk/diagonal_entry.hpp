// Diagonal-entry estimation for sparse symmetric matrices: decide whether
// (A^m)_jj >= g + eps b^m or <= g - eps b^m, with b the instance's norm
// bound.  Exact mode goes through matrix_power; the measurement route
// measures f(x) = x^m of A/b at the basis state |j>.

#pragma once

#include "specwalk/graph_gadget.hpp"
#include "specwalk/linalg.hpp"
#include "specwalk/phase_estimation.hpp"
#include "specwalk/sparse.hpp"

#include <optional>

namespace specwalk {

struct DiagonalEntryInstance {
  SparseSymmetricMatrix matrix;
  Index j = 0;
  Index m = 1;
  double g = 0.0;
  double epsilon = 0.0;
};

struct DiagonalDecision {
  PathVerdict verdict = PathVerdict::promise_violated;
  double estimate = 0.0;
  Method method = Method::exact;
  std::optional<EstimateResult> budget;
};

DiagonalDecision decide_diagonal_entry(const DiagonalEntryInstance& instance,
                                       Method method, std::uint64_t seed = 0,
                                       const MeasureOptions& opts = {});

}  // namespace specwalk
