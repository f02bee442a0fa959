#include "specwalk/diagonal_entry.hpp"

#include <cmath>
#include <stdexcept>

namespace specwalk {

DiagonalDecision decide_diagonal_entry(const DiagonalEntryInstance& instance,
                                       Method method, std::uint64_t seed,
                                       const MeasureOptions& opts) {
  const double b = instance.matrix.norm_bound();
  if (!(b > 0.0))
    throw std::invalid_argument("decide_diagonal_entry: instance needs a norm bound");
  if (instance.j < 0 || instance.j >= instance.matrix.dim())
    throw std::invalid_argument("decide_diagonal_entry: j out of range");
  const double bm = std::pow(b, static_cast<double>(instance.m));
  const double gap = instance.epsilon * bm;

  DiagonalDecision decision;
  decision.method = method;
  if (method == Method::exact) {
    DenseHermitian a = materialize(instance.matrix);
    decision.estimate =
        matrix_power(a, instance.m).entries()(instance.j, instance.j).real();
    if (decision.estimate >= instance.g + gap)
      decision.verdict = PathVerdict::ge;
    else if (decision.estimate <= instance.g - gap)
      decision.verdict = PathVerdict::le;
    else
      decision.verdict = PathVerdict::promise_violated;
    return decision;
  }

  DenseHermitian rescaled(RMat(materialize(instance.matrix).real_part() / b));
  CVec psi = CVec::Zero(instance.matrix.dim());
  psi[instance.j] = 1.0;
  FunctionDescriptor f = power_function(instance.m, 1.0);
  // ||f|| + K = 1 + m on [-1, 1]: keep the rescaled error under half the gap.
  const double eps_est =
      opts.epsilon_override > 0.0
          ? opts.epsilon_override
          : 0.45 * instance.epsilon / (1.0 + static_cast<double>(instance.m));
  EstimateResult est = estimate_expectation(rescaled, psi, f, eps_est, opts.alpha,
                                            opts.delta, seed, nullptr,
                                            opts.repetitions_override);
  decision.budget = est;
  decision.estimate = est.estimate * bm;
  decision.verdict = decision.estimate >= instance.g ? PathVerdict::ge : PathVerdict::le;
  return decision;
}

}  // namespace specwalk
