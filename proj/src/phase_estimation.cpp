#include "specwalk/phase_estimation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specwalk {

namespace {
constexpr double pi = 3.14159265358979323846;

int ceil_log2(double x) {
  // Guard against values sitting a hair above an exact power of two.
  return static_cast<int>(std::ceil(std::log2(x) - 1e-9));
}

double circular_distance(double a, double b) {
  double d = std::remainder(a - b, 2.0 * pi);
  return std::abs(d);
}

// |2^-p sum_{k<2^p} exp(ikx)|^2, the squared Dirichlet-type weight.
double pe_kernel(double x, int p) {
  const double grid = std::pow(2.0, p);
  double w = std::remainder(x, 2.0 * pi);
  if (std::abs(w) < 1e-14) return 1.0;
  const double num = std::sin(grid * 0.5 * w);
  const double den = grid * std::sin(0.5 * w);
  const double r = num / den;
  return r * r;
}
}  // namespace

int ancilla_count(double theta, double eta) {
  if (!(theta > 0.0 && theta < 1.0) || !(eta > 0.0 && eta < 1.0))
    throw std::invalid_argument("ancilla_count: theta and eta must lie in (0, 1)");
  return ceil_log2(1.0 / eta) + ceil_log2(2.0 + 1.0 / (2.0 * theta));
}

PEConfig pe_config(double theta, double eta, double delta, double alpha,
                   std::uint64_t rng_seed, Index repetitions) {
  if (delta < 0.0) throw std::invalid_argument("pe_config: delta must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("pe_config: alpha must lie in (0, 1)");
  if (repetitions < 1) throw std::invalid_argument("pe_config: repetitions must be >= 1");
  PEConfig cfg;
  cfg.theta = theta;
  cfg.eta = eta;
  cfg.p = ancilla_count(theta, eta);
  if (cfg.p > ancilla_cap)
    throw std::runtime_error("pe_config: " + std::to_string(cfg.p) +
                             " ancillas exceed the simulation cap of " +
                             std::to_string(ancilla_cap) +
                             " (resolution too fine for dense simulation)");
  cfg.delta = delta;
  cfg.alpha = alpha;
  cfg.rng_seed = rng_seed;
  cfg.repetitions = repetitions;
  return cfg;
}

double FunctionDescriptor::clamp(double x) const {
  return std::min(std::max(x, domain_lo), domain_hi);
}

void FunctionDescriptor::validate(Rng& rng, double span, int samples) const {
  const double hi = std::isinf(domain_hi) ? domain_lo + span : domain_hi;
  for (int k = 0; k < samples; ++k) {
    const double x = rng.next_double(domain_lo, hi);
    const double y = rng.next_double(domain_lo, hi);
    const double fx = evaluator(x);
    if (std::abs(fx) > sup_norm + 1e-9)
      throw std::runtime_error("FunctionDescriptor: sup-norm claim violated");
    if (std::abs(fx - evaluator(y)) > lipschitz_k * std::abs(x - y) + 1e-9)
      throw std::runtime_error("FunctionDescriptor: Lipschitz claim violated");
  }
}

FunctionDescriptor power_function(Index m, double c) {
  FunctionDescriptor f;
  f.domain_lo = -c;
  f.domain_hi = c;
  f.evaluator = [m](double x) { return std::pow(x, static_cast<double>(m)); };
  f.lipschitz_k = static_cast<double>(m) * std::pow(c, static_cast<double>(m - 1));
  f.sup_norm = std::pow(c, static_cast<double>(m));
  if (m == 0) {
    f.lipschitz_k = 0.0;
    f.sup_norm = 1.0;
  }
  return f;
}

FunctionDescriptor decaying_exponential(double rate, double lo) {
  FunctionDescriptor f;
  f.domain_lo = lo;
  f.domain_hi = std::numeric_limits<double>::infinity();
  f.evaluator = [rate](double x) { return std::exp(-rate * x); };
  f.lipschitz_k = rate * std::exp(-rate * lo);
  f.sup_norm = std::exp(-rate * lo);
  return f;
}

double OutcomeDistribution::x_of(Index a) const {
  const double grid = std::pow(2.0, p);
  const double x = 2.0 * pi * static_cast<double>(a) / grid;
  return a <= (Index{1} << (p - 1)) ? x : x - 2.0 * pi;
}

double OutcomeDistribution::mass() const {
  double s = 0.0;
  for (double q : probabilities) s += q;
  return s;
}

double OutcomeDistribution::l1_distance(const OutcomeDistribution& other) const {
  if (p != other.p) throw std::invalid_argument("l1_distance: grid mismatch");
  double s = 0.0;
  for (Index a = 0; a < grid_size(); ++a)
    s += std::abs(probabilities[a] - other.probabilities[a]);
  return s;
}

double OutcomeDistribution::mass_near(double lambda, double radius) const {
  double s = 0.0;
  for (Index a = 0; a < grid_size(); ++a)
    if (circular_distance(x_of(a), lambda) < radius) s += probabilities[a];
  return s;
}

double OutcomeDistribution::expectation(const FunctionDescriptor& f) const {
  double s = 0.0;
  for (Index a = 0; a < grid_size(); ++a) s += probabilities[a] * f.eval_clamped(x_of(a));
  return s;
}

std::vector<double> OutcomeDistribution::cumulative() const {
  std::vector<double> cum(probabilities.size());
  double acc = 0.0;
  for (std::size_t a = 0; a < probabilities.size(); ++a) {
    acc += probabilities[a];
    cum[a] = acc;
  }
  return cum;
}

double OutcomeDistribution::sample(Rng& rng, const std::vector<double>& cum) const {
  const double u = rng.next_double() * cum.back();
  auto it = std::lower_bound(cum.begin(), cum.end(), u);
  Index a = static_cast<Index>(it - cum.begin());
  if (a >= grid_size()) a = grid_size() - 1;
  return x_of(a);
}

namespace {

// Validates the run inputs and returns the eigendecomposition, checking
// ||B|| <= 1 off the same factorization.  The config must carry the
// ancilla count its (theta, eta) pair prescribes.
EigenSystem check_pe_inputs(const DenseHermitian& b_obs, const CVec& psi,
                            const PEConfig& cfg) {
  if (cfg.p != ancilla_count(cfg.theta, cfg.eta))
    throw std::invalid_argument(
        "phase estimation: config p does not match its (theta, eta)");
  if (cfg.delta < 0.0)
    throw std::invalid_argument("phase estimation: delta must be >= 0");
  if (psi.size() != b_obs.dim())
    throw std::invalid_argument("phase estimation: state dimension mismatch");
  if (std::abs(psi.norm() - 1.0) > tol::unit_norm)
    throw std::invalid_argument("phase estimation: state is not normalized");
  EigenSystem es = eig(b_obs);
  const double norm = std::max(std::abs(es.eigenvalues[0]),
                               std::abs(es.eigenvalues[es.eigenvalues.size() - 1]));
  if (norm > 1.0 + 1e-9)
    throw std::invalid_argument("phase estimation: ||B|| must be <= 1 (caller rescales)");
  return es;
}

OutcomeDistribution kernel_distribution(const EigenSystem& es, const CVec& psi,
                                        int p) {
  OutcomeDistribution out;
  out.p = p;
  const Index grid = Index{1} << p;
  out.probabilities.assign(static_cast<std::size_t>(grid), 0.0);
  const Index n = es.eigenvalues.size();
  std::vector<double> weights(static_cast<std::size_t>(n));
  for (Index j = 0; j < n; ++j)
    weights[static_cast<std::size_t>(j)] = std::norm(es.eigenvectors.col(j).dot(psi));
  for (Index a = 0; a < grid; ++a) {
    const double phase = 2.0 * pi * static_cast<double>(a) / static_cast<double>(grid);
    double q = 0.0;
    for (Index j = 0; j < n; ++j) {
      const double w = weights[static_cast<std::size_t>(j)];
      if (w < 1e-300) continue;
      q += w * pe_kernel(es.eigenvalues[j] - phase, p);
    }
    out.probabilities[static_cast<std::size_t>(a)] = q;
  }
  return out;
}

}  // namespace

OutcomeDistribution exact_outcome_distribution(const DenseHermitian& b_obs,
                                               const CVec& psi, const PEConfig& cfg) {
  EigenSystem es = check_pe_inputs(b_obs, psi, cfg);
  return kernel_distribution(es, psi, cfg.p);
}

OutcomeDistribution statevector_outcome_distribution(const DenseHermitian& b_obs,
                                                     const CVec& psi,
                                                     const PEConfig& cfg) {
  EigenSystem es = check_pe_inputs(b_obs, psi, cfg);
  const Index grid = Index{1} << cfg.p;
  const Index n = b_obs.dim();
  if (grid * n > (Index{1} << 26))
    throw std::runtime_error("statevector_outcome_distribution: register too large");
  const CMat v = matrix_exp_unitary(es, 1.0);

  // Ancillas in the uniform superposition, then V^a on the system branch a.
  CMat state(grid, n);
  const double amp = 1.0 / std::sqrt(static_cast<double>(grid));
  CVec cur = psi;
  for (Index a = 0; a < grid; ++a) {
    state.row(a) = amp * cur.transpose();
    if (a + 1 < grid) cur = v * cur;
  }

  // Inverse Fourier transform on the ancilla register, direct sum.
  OutcomeDistribution out;
  out.p = cfg.p;
  out.probabilities.assign(static_cast<std::size_t>(grid), 0.0);
  const double norm = 1.0 / std::sqrt(static_cast<double>(grid));
  for (Index k = 0; k < grid; ++k) {
    CVec row = CVec::Zero(n);
    for (Index a = 0; a < grid; ++a) {
      const double angle =
          -2.0 * pi * static_cast<double>((a * k) % grid) / static_cast<double>(grid);
      row += std::polar(norm, angle) * state.row(a).transpose();
    }
    out.probabilities[static_cast<std::size_t>(k)] = row.squaredNorm();
  }
  return out;
}

OutcomeDistribution perturbed_distribution(const DenseHermitian& b_obs, const CVec& psi,
                                           const PEConfig& cfg,
                                           const DenseHermitian& perturbation) {
  EigenSystem es = check_pe_inputs(b_obs, psi, cfg);
  if (perturbation.dim() != b_obs.dim())
    throw std::invalid_argument("perturbed_distribution: perturbation dimension mismatch");
  DenseHermitian sum(CMat(b_obs.entries() + perturbation.entries()));
  const CMat u = matrix_exp_unitary(sum, 1.0);
  const CMat v = matrix_exp_unitary(es, 1.0);
  const double dist = operator_norm(CMat(u - v));
  if (dist > cfg.delta + 1e-12)
    throw std::invalid_argument(
        "perturbed_distribution: ||exp(i(B+P)) - exp(iB)|| = " + std::to_string(dist) +
        " exceeds delta = " + std::to_string(cfg.delta));
  return kernel_distribution(eig(sum), psi, cfg.p);
}

double functional_sample(const OutcomeDistribution& dist, const FunctionDescriptor& f,
                         std::uint64_t rng_seed) {
  Rng rng = Rng::stream(rng_seed, 0);
  const auto cum = dist.cumulative();
  return f.eval_clamped(dist.sample(rng, cum));
}

EstimateResult estimate_expectation(const DenseHermitian& b_obs, const CVec& psi,
                                    const FunctionDescriptor& f, double epsilon,
                                    double alpha, double delta, std::uint64_t rng_seed,
                                    const DenseHermitian* perturbation,
                                    Index repetitions_override) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("estimate_expectation: epsilon must lie in (0, 1)");
  if (!(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("estimate_expectation: alpha must lie in (0, 1)");

  const double eta = epsilon / (6.0 * pi);
  const double theta = epsilon / 6.0;
  PEConfig cfg = pe_config(theta, eta, delta, alpha, rng_seed);
  const double pow_p2 = std::pow(2.0, cfg.p + 2);
  if (delta * pow_p2 > epsilon / 3.0)
    throw std::invalid_argument("estimate_expectation: delta 2^{p+2} exceeds epsilon/3");

  EstimateResult result;
  result.theta = theta;
  result.eta = eta;
  result.p = cfg.p;
  result.delta = delta;
  result.epsilon = epsilon;
  result.total_error_bound = epsilon * (f.sup_norm + f.lipschitz_k);
  result.sampling_budget = result.total_error_bound / 3.0;

  OutcomeDistribution dist = perturbation
                                 ? perturbed_distribution(b_obs, psi, cfg, *perturbation)
                                 : exact_outcome_distribution(b_obs, psi, cfg);

  Index n;
  if (repetitions_override > 0) {
    n = repetitions_override;
  } else {
    const double range = 2.0 * f.sup_norm;
    const double budget = result.sampling_budget;
    n = (range == 0.0)
            ? 1
            : static_cast<Index>(std::ceil(range * range / (2.0 * budget * budget) *
                                           std::log(2.0 / alpha)));
    n = std::max<Index>(n, 1);
  }

  Rng rng = Rng::stream(rng_seed, 1);
  const auto cum = dist.cumulative();
  double acc = 0.0;
  for (Index k = 0; k < n; ++k) acc += f.eval_clamped(dist.sample(rng, cum));
  result.estimate = acc / static_cast<double>(n);
  result.sample_count = n;
  return result;
}

}  // namespace specwalk
