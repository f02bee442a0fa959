#include "specwalk/graph_gadget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specwalk {

SignedSparseMatrix::SignedSparseMatrix(SparseSymmetricMatrix matrix, bool clock_derived)
    : matrix_(std::move(matrix)), clock_derived_(clock_derived) {
  for (Index i = 0; i < matrix_.dim(); ++i)
    for (const auto& e : matrix_.row(i))
      if (e.value != 1.0 && e.value != -1.0)
        throw std::invalid_argument("SignedSparseMatrix: value " +
                                    std::to_string(e.value) + " at row " +
                                    std::to_string(i) + " is outside {-1, 0, +1}");
  if (clock_derived_)
    for (Index i = 0; i < matrix_.dim(); ++i)
      if (matrix_.row(i).size() != 4)
        throw std::invalid_argument(
            "SignedSparseMatrix: clock-derived rows must have exactly 4 entries");
}

GadgetGraph signed_to_adjacency(const SignedSparseMatrix& a) {
  const Index n = a.dim();
  const Index degree = a.matrix().max_row_nonzeros();
  SparseSymmetricMatrix source = a.matrix();
  RegularGraph graph(
      2 * n, degree,
      [source](Index v) {
        const Index i = v / 2;
        const Index s = v % 2;
        std::vector<Index> out;
        for (const auto& e : source.row(i)) {
          // +1 keeps the sign bit (identity block), -1 flips it (sigma_x).
          const Index t = (e.value > 0.0) ? s : 1 - s;
          out.push_back(2 * e.col + t);
        }
        return out;
      });
  return GadgetGraph{std::move(graph), Permutation::pair_swap(2 * n), n};
}

DirectSumReport direct_sum_check(const SignedSparseMatrix& a) {
  const Index n = a.dim();
  if (2 * n > dense_cap())
    throw std::runtime_error("direct_sum_check: gadget dimension exceeds dense cap");
  GadgetGraph gadget = signed_to_adjacency(a);
  RMat tilde = materialize(gadget.graph.adjacency()).real_part();

  RMat source = materialize(a.matrix()).real_part();
  RMat squared = source.cwiseProduct(source);
  // phi- (x) A + phi+ (x) (A*A) in the interleaved ordering: the 2x2 block
  // of entry a is [[(a^2+a)/2, (a^2-a)/2], [(a^2-a)/2, (a^2+a)/2]].
  RMat expected = RMat::Zero(2 * n, 2 * n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const double v = source(i, j);
      const double vv = squared(i, j);
      expected(2 * i, 2 * j) = 0.5 * (vv + v);
      expected(2 * i + 1, 2 * j + 1) = 0.5 * (vv + v);
      expected(2 * i, 2 * j + 1) = 0.5 * (vv - v);
      expected(2 * i + 1, 2 * j) = 0.5 * (vv - v);
    }

  DirectSumReport report;
  report.max_entry_deviation = (tilde - expected).cwiseAbs().maxCoeff();

  EigenSystem es_gadget = eig(DenseHermitian(tilde));
  EigenSystem es_a = eig(DenseHermitian(source));
  EigenSystem es_sq = eig(DenseHermitian(squared));
  RVec merged(2 * n);
  merged << es_a.eigenvalues, es_sq.eigenvalues;
  std::sort(merged.begin(), merged.end());
  report.spectrum_deviation = (merged - es_gadget.eigenvalues).cwiseAbs().maxCoeff();

  auto spectral_radius = [](const EigenSystem& es) {
    return std::max(std::abs(es.eigenvalues[0]),
                    std::abs(es.eigenvalues[es.eigenvalues.size() - 1]));
  };
  report.norm_gadget = spectral_radius(es_gadget);
  report.norm_expected = std::max(spectral_radius(es_a), spectral_radius(es_sq));
  return report;
}

std::vector<std::int64_t> walk_counts(const RegularGraph& graph, Index q, Index m) {
  std::vector<std::int64_t> u(static_cast<std::size_t>(graph.dim()), 0);
  u[static_cast<std::size_t>(q)] = 1;
  std::vector<std::int64_t> next(u.size(), 0);
  for (Index step = 0; step < m; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (Index w = 0; w < graph.dim(); ++w) {
      std::int64_t acc = 0;
      for (Index v : graph.neighbors(w))
        if (__builtin_add_overflow(acc, u[static_cast<std::size_t>(v)], &acc))
          throw std::overflow_error("walk_counts: integer overflow at length " +
                                    std::to_string(step + 1));
      next[static_cast<std::size_t>(w)] = acc;
    }
    std::swap(u, next);
  }
  return u;
}

std::int64_t path_difference_exact(const RegularGraph& graph, Index q, Index r,
                                   Index m) {
  if (q < 0 || q >= graph.dim() || r < 0 || r >= graph.dim())
    throw std::invalid_argument("path_difference_exact: vertex out of range");
  const auto u = walk_counts(graph, q, m);
  return u[static_cast<std::size_t>(q)] - u[static_cast<std::size_t>(r)];
}

ReductionIdentityReport verify_reduction_identity(const SignedSparseMatrix& a, Index j,
                                                  Index m) {
  ReductionIdentityReport report;
  GadgetGraph gadget = signed_to_adjacency(a);
  const auto [q, r] = gadget.pair_of(j);

  const IMat source = materialize(a.matrix()).rounded_int();
  report.identity_holds = true;
  for (Index n = 0; n <= m; ++n) {
    const std::int64_t diag = matrix_power_int(source, n)(j, j);
    const std::int64_t delta = path_difference_exact(gadget.graph, q, r, n);
    if (diag != delta) {
      report.identity_holds = false;
      report.first_mismatch = n;
      break;
    }
  }

  report.matrix_norm = operator_norm(materialize(a.matrix()));
  report.growth_bound_holds = true;
  for (Index n = 1; n <= std::max<Index>(m, 12); ++n) {
    const double delta =
        static_cast<double>(path_difference_exact(gadget.graph, q, r, n));
    const double root = std::pow(std::abs(delta), 1.0 / static_cast<double>(n));
    if (root > report.matrix_norm + 1e-9) {
      report.growth_bound_holds = false;
      break;
    }
  }
  return report;
}

PathDecision decide_path_difference(const PathDifferenceInstance& instance,
                                    Method method, std::uint64_t seed,
                                    const MeasureOptions& opts) {
  const auto& g = instance.graph;
  if (instance.q == instance.r)
    throw std::invalid_argument("decide_path_difference: q and r must differ");
  if (instance.automorphism(instance.q) != instance.r ||
      instance.automorphism(instance.r) != instance.q ||
      !is_graph_automorphism(g, instance.automorphism))
    throw std::invalid_argument(
        "decide_path_difference: supplied permutation is not a q<->r exchanging "
        "automorphism");

  const double bm = std::pow(instance.growth_bound, static_cast<double>(instance.m));
  const double gap = instance.epsilon * bm;

  PathDecision decision;
  decision.method = method;
  if (method == Method::exact) {
    const std::int64_t delta =
        path_difference_exact(g, instance.q, instance.r, instance.m);
    decision.estimate = static_cast<double>(delta);
    if (decision.estimate >= instance.g + gap)
      decision.verdict = PathVerdict::ge;
    else if (decision.estimate <= instance.g - gap)
      decision.verdict = PathVerdict::le;
    else
      decision.verdict = PathVerdict::promise_violated;
    return decision;
  }

  // Measurement route: rescale by the degree (>= ||A~|| for a row sum d
  // adjacency), measure f(x) = x^m on the pair combination (|q>-|r>)/sqrt2.
  const double d = static_cast<double>(g.degree());
  DenseHermitian b(RMat(materialize(g.adjacency()).real_part() / d));
  CVec psi = CVec::Zero(g.dim());
  psi[instance.q] = 1.0 / std::sqrt(2.0);
  psi[instance.r] = -1.0 / std::sqrt(2.0);
  FunctionDescriptor f = power_function(instance.m, instance.growth_bound / d);

  // Error budget: d^m * eps_est * (||f|| + K) stays below half the promise
  // gap eps b^m, so a correct estimate resolves the promise.
  const double eps_est =
      opts.epsilon_override > 0.0
          ? opts.epsilon_override
          : 0.45 * instance.epsilon /
                (1.0 + static_cast<double>(instance.m) * d / instance.growth_bound);
  EstimateResult est = estimate_expectation(b, psi, f, eps_est, opts.alpha, opts.delta,
                                            seed, nullptr, opts.repetitions_override);
  decision.budget = est;
  decision.estimate = est.estimate * std::pow(d, static_cast<double>(instance.m));
  decision.verdict =
      decision.estimate >= instance.g ? PathVerdict::ge : PathVerdict::le;
  return decision;
}

}  // namespace specwalk
