#include "specwalk/witness_search.hpp"

#include "specwalk/graph_gadget.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace specwalk {

WitnessReport decide_witness(const WitnessInstance& instance, Method method,
                             std::uint64_t seed, double alpha) {
  const auto& g = instance.graph;
  if (g.dim() % 2 != 0)
    throw std::invalid_argument("decide_witness: node count must be even");
  if (instance.n_tilde < 0 || 2 * instance.n_tilde > g.dim())
    throw std::invalid_argument("decide_witness: n_tilde out of range");
  if (!is_graph_automorphism(g, Permutation::pair_swap(g.dim())))
    throw std::invalid_argument("decide_witness: pairing v <-> v^1 is not an automorphism");

  WitnessReport report;
  report.method = method;
  if (instance.n_tilde == 0) return report;

  const double decay = std::exp(-instance.mu * instance.t_query);
  const double slow = instance.a_const * decay;
  const double fast = instance.b_const * decay;

  if (method == Method::exact) {
    LaplacianSpectrum s = laplacian_spectrum(g);
    bool violated = false;
    Index first_slow = -1;
    for (Index j = 0; j < instance.n_tilde; ++j) {
      const Index q = 2 * j, r = 2 * j + 1;
      const double c = c_exact(s, q, r, instance.t_query);
      report.pair_c.push_back(c);
      if (pair_support_min(s, q, r) < instance.mu - 1e-9 || (c < slow && c > fast))
        violated = true;
      else if (c >= slow && first_slow < 0)
        first_slow = j;
    }
    if (violated)
      report.kind = WitnessVerdictKind::promise_violated;
    else if (first_slow >= 0) {
      report.kind = WitnessVerdictKind::exists;
      report.witness_index = first_slow;
    }
    return report;
  }

  // Sampling mode: per-pair decisions at confidence alpha / n_tilde.
  const double per_pair_alpha = alpha / static_cast<double>(instance.n_tilde);
  for (Index j = 0; j < instance.n_tilde; ++j) {
    WalkInstance pair;
    pair.graph = g;
    pair.q = 2 * j;
    pair.r = 2 * j + 1;
    pair.mu = instance.mu;
    pair.a_const = instance.a_const;
    pair.b_const = instance.b_const;
    pair.t_query = instance.t_query;
    pair.automorphism = Permutation::pair_swap(g.dim());
    MeasureOptions pair_opts;
    pair_opts.alpha = per_pair_alpha;
    DecayDecision d = decide_decay(pair, Method::quantum_sim,
                                   seed + static_cast<std::uint64_t>(j) * 0x9e37ull,
                                   pair_opts);
    report.pair_c.push_back(d.c_estimate);
    if (d.verdict == DecayVerdict::ge_a) {
      report.kind = WitnessVerdictKind::exists;
      report.witness_index = j;
      return report;
    }
  }
  return report;
}

WitnessConstruction build_witness_instance(const GateCircuit& verifier,
                                           int witness_bits) {
  verifier.validate();
  if (witness_bits < 0 || witness_bits + 1 > verifier.width)
    throw std::invalid_argument("build_witness_instance: witness register too wide");
  for (const Gate& g : verifier.gates)
    if (!g.two_sparse())
      throw std::invalid_argument(
          "build_witness_instance: verifier must use Hadamard-kind gates only");

  // Embed the verifier, negate its output through two always-one wires,
  // and close the involution around a middle Hadamard on the output.
  const int hot1 = verifier.width;
  const int hot2 = verifier.width + 1;
  GateCircuit closed;
  closed.width = verifier.width + 2;
  if (closed.width > statevector_cap)
    throw std::runtime_error("build_witness_instance: width exceeds statevector cap");
  closed.input_bits.assign(static_cast<std::size_t>(closed.width), 0);
  closed.input_bits[static_cast<std::size_t>(hot1)] = 1;
  closed.input_bits[static_cast<std::size_t>(hot2)] = 1;

  std::vector<Gate> negated = verifier.gates;
  negated.push_back(Gate::ht(hot1, hot2, 0));  // with both hots on: X on wire 0
  negated.push_back(Gate::h(0));
  closed.gates = negated;
  closed.gates.push_back(Gate::h(0));
  for (auto it = negated.rbegin(); it != negated.rend(); ++it)
    closed.gates.push_back(it->adjoint());

  ClockHermitian clock = build_clock_hermitian(closed);
  GadgetGraph gadget = signed_to_adjacency(SignedSparseMatrix(clock.a_matrix, true));

  // Pair index of witness y: clock sector 0, system state (0, y, 0.., 1, 1).
  const Index n_tilde = Index{1} << witness_bits;
  const Index hot_mask = (Index{1} << hot1) | (Index{1} << hot2);
  const Index pairs = gadget.graph.dim() / 2;
  std::vector<Index> pair_relabel(static_cast<std::size_t>(pairs), -1);
  for (Index y = 0; y < n_tilde; ++y)
    pair_relabel[static_cast<std::size_t>(hot_mask | (y << 1))] = y;
  Index next = n_tilde;
  for (Index v = 0; v < pairs; ++v)
    if (pair_relabel[static_cast<std::size_t>(v)] < 0)
      pair_relabel[static_cast<std::size_t>(v)] = next++;

  Permutation relabel;
  relabel.image.resize(static_cast<std::size_t>(gadget.graph.dim()));
  for (Index v = 0; v < pairs; ++v) {
    relabel.image[static_cast<std::size_t>(2 * v)] =
        2 * pair_relabel[static_cast<std::size_t>(v)];
    relabel.image[static_cast<std::size_t>(2 * v + 1)] =
        2 * pair_relabel[static_cast<std::size_t>(v)] + 1;
  }
  relabel.validate();
  Permutation inverse = relabel.inverse();

  RegularGraph base = gadget.graph;
  RegularGraph relabeled(
      base.dim(), base.degree(),
      [base, relabel, inverse](Index w) {
        std::vector<Index> out;
        for (Index u : base.neighbors(inverse(w))) out.push_back(relabel(u));
        std::sort(out.begin(), out.end());
        return out;
      });

  HardnessParameters hp =
      hardness_parameters(clock.clock_size, ClockHermitian::eigenvalue_scale);

  WitnessConstruction out;
  out.instance.graph = std::move(relabeled);
  out.instance.n_tilde = n_tilde;
  out.instance.mu = hp.mu;
  out.instance.a_const = hp.reject_threshold;
  out.instance.b_const = hp.accept_threshold;
  out.instance.t_query = hp.t_star;
  out.involution = std::move(closed);
  out.clock_size = clock.clock_size;
  out.witness_bits = witness_bits;
  out.node_relabel = std::move(relabel);
  return out;
}

}  // namespace specwalk
