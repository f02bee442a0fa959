// Classical random walks on regular graphs.
//
// Discrete time: for a 4-regular graph (self-loop row sums included) the
// matrix A~/4 is doubly stochastic and (A~/4)^m gives m-step occupation
// probabilities.  Continuous time: the Laplacian L = d 1 - A~ generates
// p(t) = exp(-L t) p, and the pairwise decay statistic is
//
//   c_qr(t) = (e^{-Lt})_qq - (e^{-Lt})_qr,
//
// which, when an automorphism exchanges q and r, equals the quadratic
// form of e^{-Lt} at (|q> - |r>)/sqrt2.  Both forms are evaluated as
// spectral sums so they stay accurate far into the exponential tail.
//
// Hardness parameters.  For a clock of M layers the decay exponents are
// mu = 4 - s and nu = 4 - s cos(pi/M), with s the largest eigenvalue in
// the support of the clock spectral measure.  The separation argument is
// the same for any s, so the scale is an explicit argument: the default
// s = sqrt2 is the textbook normalization of A = (W + W*)/2 rescaled by
// sqrt2, while the materialized integer matrix carries s = 2 sqrt2
// (ClockHermitian::eigenvalue_scale).

#pragma once

#include "specwalk/circuits.hpp"
#include "specwalk/graph.hpp"
#include "specwalk/linalg.hpp"
#include "specwalk/phase_estimation.hpp"

#include <optional>
#include <vector>

namespace specwalk {

struct WalkInstance {
  RegularGraph graph;
  Index q = 0;
  Index r = 1;
  double mu = 0.0;       // promised decay exponent, > 0
  double a_const = 0.0;  // slow-side threshold, b < a < 1
  double b_const = 0.0;
  double t_query = 0.0;  // time instant T
  Permutation automorphism;  // must exchange q and r
};

// Throws unless every row sum equals the declared degree.
void verify_regular(const RegularGraph& g);

// L = d 1 - A~ as a dense Hermitian (self-loops reduce the diagonal so
// rows sum to zero).  Dense-cap limited.
DenseHermitian laplacian_of(const RegularGraph& g);

// Eigendecomposition of the Laplacian with real eigenvectors.
struct LaplacianSpectrum {
  RVec eigenvalues;
  RMat eigenvectors;
};
LaplacianSpectrum laplacian_spectrum(const RegularGraph& g);

// c_qr(t) as a spectral sum over (e^{-Lt})_qq - (e^{-Lt})_qr.
double c_exact(const LaplacianSpectrum& s, Index q, Index r, double t);
double c_exact(const WalkInstance& instance, double t);

// Quadratic form <psi-| e^{-Lt} |psi->, psi- = (|q> - |r>)/sqrt2.
double c_pair_form(const LaplacianSpectrum& s, Index q, Index r, double t);

// Smallest L-eigenvalue carrying psi- weight above the threshold.
double pair_support_min(const LaplacianSpectrum& s, Index q, Index r,
                        double weight_tol = 1e-12);

// A~/4 for a 4-regular graph; rows and columns sum to 1.
RMat discrete_walk_matrix(const RegularGraph& g);

struct HardnessParameters {
  Index clock_size = 0;
  double spectral_scale = 0.0;
  double mu = 0.0;                // 4 - scale
  double nu = 0.0;                // 4 - scale cos(pi/M)
  double t_star = 0.0;            // ln(6M) / (nu - mu)
  double accept_threshold = 0.0;  // 1/(2M)
  double reject_threshold = 0.0;  // 2/(3M)

  // c_qr(t) >= (alpha0^2/M) e^{-mu t}
  double lower_envelope(double alpha0_sq, double t) const;
  // c_qr(t) <= (alpha0^2/M) e^{-mu t} + e^{-nu t}
  double upper_envelope(double alpha0_sq, double t) const;
};

inline constexpr double reference_clock_scale = 1.4142135623730951;  // sqrt2

HardnessParameters hardness_parameters(Index m_gates,
                                       double spectral_scale = reference_clock_scale);

enum class DecayVerdict { ge_a, le_b, promise_violated };

struct DecayDecision {
  DecayVerdict verdict = DecayVerdict::promise_violated;
  double c_estimate = 0.0;
  double threshold_a = 0.0;  // a e^{-mu T}
  double threshold_b = 0.0;
  Method method = Method::exact;
  std::optional<EstimateResult> budget;
};

// Norm bound used to rescale L on the measurement path.
enum class LaplacianBound { twice_degree, gershgorin };

DecayDecision decide_decay(const WalkInstance& instance, Method method,
                           std::uint64_t seed = 0, const MeasureOptions& opts = {},
                           LaplacianBound bound = LaplacianBound::twice_degree);

// End-to-end check of the clock -> gadget -> walk chain for one circuit:
// gadget-vs-clock equality of c_qr, the spectral envelopes at sampled
// times, and the accept/reject separation at T.
struct DecayReductionReport {
  double alpha1_sq = 0.0;
  HardnessParameters params;          // at the materialized clock scale
  bool gadget_built = false;          // false when a bare z layer blocks it
  double chain_identity_deviation = 0.0;    // rel. gadget vs clock c(t)
  double envelope_violation = 0.0;          // worst relative violation
  bool separation_checked = false;    // alpha outside (1/3, 2/3)
  bool separation_holds = false;
  double c_at_t_star = 0.0;
  bool ok(double rel_tol = 1e-9) const {
    return chain_identity_deviation <= rel_tol && envelope_violation <= rel_tol &&
           (!separation_checked || separation_holds);
  }
};
DecayReductionReport verify_decay_reduction(const GateCircuit& u);

}  // namespace specwalk
