#include "specwalk/random_walks.hpp"

#include "specwalk/graph_gadget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specwalk {

void verify_regular(const RegularGraph& g) {
  for (Index v = 0; v < g.dim(); ++v)
    if (static_cast<Index>(g.neighbors(v).size()) != g.degree())
      throw std::invalid_argument("graph is not regular: vertex " + std::to_string(v) +
                                  " has row sum " +
                                  std::to_string(g.neighbors(v).size()));
}

DenseHermitian laplacian_of(const RegularGraph& g) {
  verify_regular(g);
  if (g.dim() > dense_cap())
    throw std::runtime_error("laplacian_of: dimension exceeds dense cap");
  RMat l = RMat::Zero(g.dim(), g.dim());
  const double d = static_cast<double>(g.degree());
  for (Index v = 0; v < g.dim(); ++v) {
    l(v, v) = d;
    for (Index u : g.neighbors(v)) l(v, u) -= 1.0;
  }
  return DenseHermitian(l);
}

LaplacianSpectrum laplacian_spectrum(const RegularGraph& g) {
  EigenSystem es = eig(laplacian_of(g));
  return {es.eigenvalues, es.eigenvectors.real()};
}

double c_exact(const LaplacianSpectrum& s, Index q, Index r, double t) {
  // (e^{-Lt})_qq - (e^{-Lt})_qr combined per eigenvector before summing,
  // so the exponential tail keeps its relative accuracy.
  double c = 0.0;
  for (Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double vq = s.eigenvectors(q, i);
    const double vr = s.eigenvectors(r, i);
    c += vq * (vq - vr) * std::exp(-s.eigenvalues[i] * t);
  }
  return c;
}

double c_exact(const WalkInstance& instance, double t) {
  return c_exact(laplacian_spectrum(instance.graph), instance.q, instance.r, t);
}

double c_pair_form(const LaplacianSpectrum& s, Index q, Index r, double t) {
  double c = 0.0;
  for (Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double amp = (s.eigenvectors(q, i) - s.eigenvectors(r, i)) / std::sqrt(2.0);
    c += amp * amp * std::exp(-s.eigenvalues[i] * t);
  }
  return c;
}

double pair_support_min(const LaplacianSpectrum& s, Index q, Index r,
                        double weight_tol) {
  for (Index i = 0; i < s.eigenvalues.size(); ++i) {
    const double amp = (s.eigenvectors(q, i) - s.eigenvectors(r, i)) / std::sqrt(2.0);
    if (amp * amp > weight_tol) return s.eigenvalues[i];
  }
  throw std::runtime_error("pair_support_min: |q> - |r> has no spectral weight");
}

RMat discrete_walk_matrix(const RegularGraph& g) {
  verify_regular(g);
  if (g.degree() != 4)
    throw std::invalid_argument("discrete_walk_matrix: graph must be 4-regular");
  if (g.dim() > dense_cap())
    throw std::runtime_error("discrete_walk_matrix: dimension exceeds dense cap");
  return materialize(g.adjacency()).real_part() / 4.0;
}

double HardnessParameters::lower_envelope(double alpha0_sq, double t) const {
  return alpha0_sq / static_cast<double>(clock_size) * std::exp(-mu * t);
}

double HardnessParameters::upper_envelope(double alpha0_sq, double t) const {
  return lower_envelope(alpha0_sq, t) + std::exp(-nu * t);
}

HardnessParameters hardness_parameters(Index m_gates, double spectral_scale) {
  if (m_gates < 3 || m_gates % 2 == 0)
    throw std::invalid_argument("hardness_parameters: M must be odd and >= 3");
  const double m = static_cast<double>(m_gates);
  const double pi = std::acos(-1.0);
  HardnessParameters hp;
  hp.clock_size = m_gates;
  hp.spectral_scale = spectral_scale;
  hp.mu = 4.0 - spectral_scale;
  hp.nu = 4.0 - spectral_scale * std::cos(pi / m);
  hp.t_star = std::log(6.0 * m) / (hp.nu - hp.mu);
  hp.accept_threshold = 1.0 / (2.0 * m);
  hp.reject_threshold = 2.0 / (3.0 * m);
  return hp;
}

DecayDecision decide_decay(const WalkInstance& instance, Method method,
                           std::uint64_t seed, const MeasureOptions& opts,
                           LaplacianBound bound) {
  if (!(instance.mu > 0.0))
    throw std::invalid_argument("decide_decay: mu must be positive");
  if (!(instance.t_query > 0.0) || !std::isfinite(instance.t_query))
    throw std::invalid_argument("decide_decay: T must be finite and positive");
  if (!(instance.b_const < instance.a_const && instance.a_const < 1.0 &&
        instance.b_const > 0.0))
    throw std::invalid_argument("decide_decay: thresholds must satisfy 0 < b < a < 1");
  if (instance.automorphism(instance.q) != instance.r ||
      instance.automorphism(instance.r) != instance.q ||
      !is_graph_automorphism(instance.graph, instance.automorphism))
    throw std::invalid_argument(
        "decide_decay: supplied permutation is not a q<->r exchanging automorphism");

  DecayDecision decision;
  decision.method = method;
  const double scale = std::exp(-instance.mu * instance.t_query);
  decision.threshold_a = instance.a_const * scale;
  decision.threshold_b = instance.b_const * scale;

  if (method == Method::exact) {
    LaplacianSpectrum s = laplacian_spectrum(instance.graph);
    if (pair_support_min(s, instance.q, instance.r) < instance.mu - 1e-9) {
      decision.verdict = DecayVerdict::promise_violated;
      decision.c_estimate = c_exact(s, instance.q, instance.r, instance.t_query);
      return decision;
    }
    decision.c_estimate = c_exact(s, instance.q, instance.r, instance.t_query);
    if (decision.c_estimate >= decision.threshold_a)
      decision.verdict = DecayVerdict::ge_a;
    else if (decision.c_estimate <= decision.threshold_b)
      decision.verdict = DecayVerdict::le_b;
    else
      decision.verdict = DecayVerdict::promise_violated;
    return decision;
  }

  // Measurement route: rescale L to norm <= 1, measure f(x) = e^{-x beta T}
  // on the pair combination; domain [mu/beta, inf) per the decay promise.
  verify_regular(instance.graph);
  DenseHermitian lap = laplacian_of(instance.graph);
  double beta = 2.0 * static_cast<double>(instance.graph.degree());
  if (bound == LaplacianBound::gershgorin) {
    double worst = 0.0;
    const RMat l = lap.real_part();
    for (Index v = 0; v < l.rows(); ++v) {
      double radius = 0.0;
      for (Index u = 0; u < l.cols(); ++u)
        if (u != v) radius += std::abs(l(v, u));
      worst = std::max(worst, l(v, v) + radius);
    }
    beta = worst;
  }

  DenseHermitian b(RMat(lap.real_part() / beta));
  CVec psi = CVec::Zero(instance.graph.dim());
  psi[instance.q] = 1.0 / std::sqrt(2.0);
  psi[instance.r] = -1.0 / std::sqrt(2.0);
  FunctionDescriptor f =
      decaying_exponential(beta * instance.t_query, instance.mu / beta);

  // Budget: eps (||f|| + K) below half the (a-b) e^{-mu T} separation.
  const double eps = opts.epsilon_override > 0.0
                         ? opts.epsilon_override
                         : 0.45 * (instance.a_const - instance.b_const) /
                               (1.0 + beta * instance.t_query);
  EstimateResult est = estimate_expectation(b, psi, f, eps, opts.alpha, opts.delta,
                                            seed, nullptr, opts.repetitions_override);
  decision.budget = est;
  decision.c_estimate = est.estimate;
  const double midpoint = 0.5 * (decision.threshold_a + decision.threshold_b);
  decision.verdict =
      decision.c_estimate >= midpoint ? DecayVerdict::ge_a : DecayVerdict::le_b;
  return decision;
}

DecayReductionReport verify_decay_reduction(const GateCircuit& u) {
  ClockHermitian clock = build_clock_hermitian(u);
  DecayReductionReport report;
  report.alpha1_sq = involution_alpha1_sq(u);
  report.params =
      hardness_parameters(clock.clock_size, ClockHermitian::eigenvalue_scale);
  const double alpha0_sq = 1.0 - report.alpha1_sq;

  // Spectral measure of the clock matrix at the start state; the walk
  // generator on the clock side is 4*1 - A.
  EigenSystem es = eig(materialize(clock.a_matrix));
  CVec start = CVec::Zero(clock.dim());
  start[clock.start_index] = 1.0;
  SpectralMeasure measure = project_state(es, start).pruned();

  auto c_clock = [&measure](double t) {
    double c = 0.0;
    for (std::size_t k = 0; k < measure.values.size(); ++k)
      c += measure.weights[k] * std::exp(-(4.0 - measure.values[k]) * t);
    return c;
  };

  // Gadget side, when the matrix is a legal +/-1 instance.
  report.chain_identity_deviation = 0.0;
  if (clock.two_sparse_layers) {
    report.gadget_built = true;
    GadgetGraph gadget = signed_to_adjacency(SignedSparseMatrix(clock.a_matrix, true));
    LaplacianSpectrum ls = laplacian_spectrum(gadget.graph);
    const auto [q, r] = gadget.pair_of(clock.start_index);
    for (int k = 0; k <= 20; ++k) {
      const double t = report.params.t_star * static_cast<double>(k) / 20.0;
      const double lhs = c_exact(ls, q, r, t);
      const double rhs = c_clock(t);
      report.chain_identity_deviation =
          std::max(report.chain_identity_deviation,
                   std::abs(lhs - rhs) / std::max({std::abs(rhs), 1e-300}));
    }
  }

  // Envelopes at sampled times (exact inequalities, fp slack only).
  report.envelope_violation = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double t = report.params.t_star * static_cast<double>(k) / 20.0;
    const double c = c_clock(t);
    const double lo = report.params.lower_envelope(alpha0_sq, t);
    const double hi = report.params.upper_envelope(alpha0_sq, t);
    report.envelope_violation =
        std::max({report.envelope_violation, (lo - c) / std::max(lo, 1e-300),
                  (c - hi) / std::max(hi, 1e-300)});
  }
  report.envelope_violation = std::max(report.envelope_violation, 0.0);

  report.c_at_t_star = c_clock(report.params.t_star);
  const double decay = std::exp(-report.params.mu * report.params.t_star);
  if (alpha0_sq >= 2.0 / 3.0) {
    report.separation_checked = true;
    report.separation_holds =
        report.c_at_t_star >= report.params.reject_threshold * decay * (1.0 - 1e-12);
  } else if (alpha0_sq <= 1.0 / 3.0) {
    report.separation_checked = true;
    report.separation_holds =
        report.c_at_t_star <= report.params.accept_threshold * decay * (1.0 + 1e-12);
  }
  return report;
}

}  // namespace specwalk
