// Witness search over paired nodes: given a graph on 2N nodes whose
// pairing v <-> v xor 1 is an automorphism, decide whether some pair
// (2j, 2j+1) with j < N~ shows slow decay, c_{2j,2j+1}(T) >= a e^{-mu T}.
//
// Instances are built from a classical verifier circuit: the verifier's
// output is negated, the negated circuit is closed into an involution
// around a middle Hadamard on the output wire, and the resulting clock
// matrix is pushed through the graph gadget.  Nodes are relabeled so the
// pair (2j, 2j+1) belongs to witness string j; an accepting witness then
// yields the slow-decay side and a rejecting one the fast side.

#pragma once

#include "specwalk/circuits.hpp"
#include "specwalk/graph.hpp"
#include "specwalk/random_walks.hpp"

#include <vector>

namespace specwalk {

struct WitnessInstance {
  RegularGraph graph;   // 2N nodes, pairing automorphism required
  Index n_tilde = 0;    // candidate pairs are j = 0 .. n_tilde - 1
  double mu = 0.0;
  double a_const = 0.0;
  double b_const = 0.0;
  double t_query = 0.0;
};

enum class WitnessVerdictKind { exists, none, promise_violated };

struct WitnessReport {
  WitnessVerdictKind kind = WitnessVerdictKind::none;
  Index witness_index = -1;     // smallest slow-decay j on exists
  std::vector<double> pair_c;   // exact mode: c value per candidate pair
  Method method = Method::exact;
};

// Exhaustive per-pair evaluation (the desk-scale stand-in for the
// nondeterministic witness choice).  Sampling mode splits the confidence
// alpha over the n_tilde pairs.
WitnessReport decide_witness(const WitnessInstance& instance, Method method,
                             std::uint64_t seed = 0, double alpha = 0.05);

struct WitnessConstruction {
  WitnessInstance instance;
  GateCircuit involution;    // the closed circuit the clock was built from
  Index clock_size = 0;      // M
  int witness_bits = 0;
  Permutation node_relabel;  // gadget node -> instance node
};

// Verifier convention: wire 0 is the output, wires 1..witness_bits hold
// the witness string, remaining wires are zero ancillas.  The builder
// appends two always-one wires that drive the output negation.  Only
// Hadamard-kind gates are allowed (a bare z layer has no +/-1 gadget).
WitnessConstruction build_witness_instance(const GateCircuit& verifier,
                                           int witness_bits);

}  // namespace specwalk
