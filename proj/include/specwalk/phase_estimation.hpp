// Simulated phase-estimation measurement of functions of bounded
// observables.
//
// For an observable B with ||B|| <= 1 the textbook circuit applies
// controlled powers of V = exp(iB) to a p-qubit ancilla register and
// measures after an inverse Fourier transform.  The outcome a is remapped
// to a phase x = 2 pi a / 2^p (minus 2 pi when a > 2^{p-1}).  The exact
// outcome distribution is computed two independent ways:
//
//   (a) full statevector simulation of the circuit, and
//   (b) the Dirichlet kernel over the eigendecomposition,
//         q(a) = sum_j |c_j|^2 | 2^-p sum_k exp(ik(l_j - 2 pi a/2^p)) |^2.
//
// Route (b) is the production path; route (a) is the cross-check oracle.
// Post-processing draws x, clamps it into the function's domain interval,
// and applies f; repeated sampling gives the expectation estimator with a
// Hoeffding repetition count.

#pragma once

#include "specwalk/linalg.hpp"
#include "specwalk/rng.hpp"
#include "specwalk/types.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace specwalk {

// Ancillas: ceil(log2(1/eta)) + ceil(log2(2 + 1/(2 theta))).
int ancilla_count(double theta, double eta);

// Grid sizes above this are refused (the distribution is materialized).
inline constexpr int ancilla_cap = 22;

struct PEConfig {
  double theta = 0.0;   // failure probability, in (0, 1)
  double eta = 0.0;     // phase resolution, in (0, 1)
  int p = 0;            // ancilla count, fixed by (theta, eta)
  double delta = 0.0;   // unitary approximation error, >= 0
  Index repetitions = 1;
  double alpha = 0.05;  // overall confidence parameter
  std::uint64_t rng_seed = 0;
};

// Builds a config and derives p; validates parameter ranges.
PEConfig pe_config(double theta, double eta, double delta = 0.0, double alpha = 0.05,
                   std::uint64_t rng_seed = 0, Index repetitions = 1);

// Lipschitz function on a closed, possibly right-infinite interval.
struct FunctionDescriptor {
  double domain_lo = -1.0;
  double domain_hi = 1.0;  // +infinity allowed
  std::function<double(double)> evaluator;
  double lipschitz_k = 0.0;
  double sup_norm = 0.0;

  double clamp(double x) const;
  double eval_clamped(double x) const { return evaluator(clamp(x)); }
  // Spot-checks the Lipschitz and sup-norm claims on random domain pairs.
  void validate(Rng& rng, double span = 1.0, int samples = 64) const;
};

// f(x) = x^m on [-c, c]; Lipschitz constant m c^{m-1}, sup norm c^m.
FunctionDescriptor power_function(Index m, double c);
// f(x) = exp(-rate x) on [lo, +inf); Lipschitz rate * exp(-rate lo).
FunctionDescriptor decaying_exponential(double rate, double lo);

struct OutcomeDistribution {
  int p = 0;
  std::vector<double> probabilities;  // indexed by a in [0, 2^p)

  Index grid_size() const { return Index{1} << p; }
  // Remapped phase of outcome a.
  double x_of(Index a) const;
  double mass() const;
  double l1_distance(const OutcomeDistribution& other) const;
  // Probability mass within circular distance `radius` of phase `lambda`.
  double mass_near(double lambda, double radius) const;
  // Exact expectation of f(clamped outcome) under this distribution.
  double expectation(const FunctionDescriptor& f) const;
  // Inverse-CDF draw of a remapped outcome.
  double sample(Rng& rng, const std::vector<double>& cumulative) const;
  std::vector<double> cumulative() const;
};

// Exact distribution via the Dirichlet kernel (production path).
OutcomeDistribution exact_outcome_distribution(const DenseHermitian& b_obs,
                                               const CVec& psi, const PEConfig& cfg);

// Same distribution by full circuit simulation (independent oracle).
OutcomeDistribution statevector_outcome_distribution(const DenseHermitian& b_obs,
                                                     const CVec& psi,
                                                     const PEConfig& cfg);

// Distribution when the circuit runs exp(i(B + P)) in place of exp(iB).
// The perturbed unitary must stay within cfg.delta of the exact one.
OutcomeDistribution perturbed_distribution(const DenseHermitian& b_obs, const CVec& psi,
                                           const PEConfig& cfg,
                                           const DenseHermitian& perturbation);

// One draw: sample x, clamp into f's domain, apply f.
double functional_sample(const OutcomeDistribution& dist, const FunctionDescriptor& f,
                         std::uint64_t rng_seed);

// Knobs for the measurement route of the decision problems.  epsilon and
// repetitions default to values derived from the promise gap; delta
// tightens the budget check for callers modeling an approximate unitary.
struct MeasureOptions {
  double alpha = 0.05;
  double epsilon_override = 0.0;  // 0: derive from the promise gap
  double delta = 0.0;
  Index repetitions_override = 0;
};

struct EstimateResult {
  double estimate = 0.0;
  Index sample_count = 0;
  // Resolved parameter set, reported so error budgets are auditable.
  double theta = 0.0;
  double eta = 0.0;
  int p = 0;
  double delta = 0.0;
  double epsilon = 0.0;
  double sampling_budget = 0.0;  // absolute Hoeffding budget epsilon'
  double total_error_bound = 0.0;  // epsilon * (||f||_inf + K)
};

// Estimates <psi| f(B) |psi> to within epsilon * (||f||_inf + K) with
// probability >= 1 - alpha.  Parameter choices: eta = epsilon/(6 pi),
// theta = epsilon/6, p from ancilla_count, and delta 2^{p+2} <= epsilon/3
// must hold.  The repetition count is the two-sided Hoeffding bound
// n = ceil(R^2/(2 e'^2) ln(2/alpha)) with R = 2 ||f||_inf and e' one third
// of the total budget.
EstimateResult estimate_expectation(
    const DenseHermitian& b_obs, const CVec& psi, const FunctionDescriptor& f,
    double epsilon, double alpha, double delta = 0.0, std::uint64_t rng_seed = 0,
    const DenseHermitian* perturbation = nullptr, Index repetitions_override = 0);

}  // namespace specwalk
