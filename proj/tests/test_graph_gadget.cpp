#include "specwalk/graph_gadget.hpp"

#include "specwalk/circuits.hpp"
#include "specwalk/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>

using namespace specwalk;

namespace {
SignedSparseMatrix signed_from_dense(const RMat& a) {
  return SignedSparseMatrix(SparseSymmetricMatrix::from_dense(a));
}

SignedSparseMatrix random_signed(Index n, double density, Rng& rng) {
  RMat a = RMat::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      if (rng.next_double() < density) {
        const double v = rng.next_below(2) ? 1.0 : -1.0;
        a(i, j) = v;
        a(j, i) = v;
      }
  // Keep at least one entry so the graph has an edge.
  if (a.cwiseAbs().sum() == 0.0) a(0, 0) = 1.0;
  return signed_from_dense(a);
}
}  // namespace

TEST_CASE("gadget of [[+1]]: two self-loops, constant walk difference") {
  RMat plus(1, 1);
  plus << 1.0;
  GadgetGraph g = signed_to_adjacency(signed_from_dense(plus));
  CHECK(g.graph.dim() == 2);
  CHECK(g.graph.neighbors(0) == std::vector<Index>{0});
  CHECK(g.graph.neighbors(1) == std::vector<Index>{1});
  for (Index m : {0, 1, 2, 5})
    CHECK(path_difference_exact(g.graph, 0, 1, m) == 1);
}

TEST_CASE("gadget of [[-1]]: a single exchanged edge, alternating difference") {
  RMat minus(1, 1);
  minus << -1.0;
  GadgetGraph g = signed_to_adjacency(signed_from_dense(minus));
  CHECK(g.graph.neighbors(0) == std::vector<Index>{1});
  CHECK(g.graph.neighbors(1) == std::vector<Index>{0});
  for (Index m : {0, 1, 2, 3, 6, 7})
    CHECK(path_difference_exact(g.graph, 0, 1, m) == (m % 2 == 0 ? 1 : -1));
}

TEST_CASE("gadget of a 2x2 off-diagonal -1: hand-enumerated edges and differences") {
  RMat a(2, 2);
  a << 0, -1, -1, 0;
  GadgetGraph g = signed_to_adjacency(signed_from_dense(a));
  CHECK(g.graph.dim() == 4);
  CHECK(g.graph.neighbors(0) == std::vector<Index>{3});
  CHECK(g.graph.neighbors(1) == std::vector<Index>{2});
  CHECK(g.graph.neighbors(2) == std::vector<Index>{1});
  CHECK(g.graph.neighbors(3) == std::vector<Index>{0});
  CHECK(path_difference_exact(g.graph, 0, 1, 1) == 0);
  CHECK(path_difference_exact(g.graph, 0, 1, 2) == 1);
}

TEST_CASE("values outside {-1, 0, +1} are rejected") {
  RMat bad(1, 1);
  bad << 2.0;
  CHECK_THROWS(signed_from_dense(bad));
}

TEST_CASE("clock-derived gadgets are 4-regular and pair-swap symmetric") {
  GateCircuit u = hadamard_involution(deterministic_circuit(2, 2, {1, 0}));
  ClockHermitian clock = build_clock_hermitian(u);
  GadgetGraph g = signed_to_adjacency(SignedSparseMatrix(clock.a_matrix, true));
  for (Index v = 0; v < g.graph.dim(); ++v)
    CHECK(g.graph.neighbors(v).size() == 4);
  CHECK(is_graph_automorphism(g.graph, g.pair_exchange));
}

TEST_CASE("pair-swap automorphism holds for random signed gadgets") {
  Rng rng(1000);
  for (int trial = 0; trial < 8; ++trial) {
    GadgetGraph g =
        signed_to_adjacency(random_signed(2 + rng.next_below(6), 0.5, rng));
    CHECK(is_graph_automorphism(g.graph, Permutation::pair_swap(g.graph.dim())));
  }
}

TEST_CASE("direct sum decomposition: exact entries, merged spectrum, norm identity") {
  Rng rng(3030);
  for (int trial = 0; trial < 8; ++trial) {
    SignedSparseMatrix a = random_signed(2 + rng.next_below(7), 0.5, rng);
    DirectSumReport r = direct_sum_check(a);
    CHECK(r.max_entry_deviation == 0.0);
    CHECK(r.spectrum_deviation < 1e-9);
    CHECK(r.norm_gadget == doctest::Approx(r.norm_expected).epsilon(1e-11));
    CHECK(r.ok());
  }
}

TEST_CASE("walk counting: K5 hand counts and brute-force enumeration") {
  RegularGraph k5 = complete_graph(5);
  CHECK(path_difference_exact(k5, 0, 3, 0) == 1);
  CHECK(path_difference_exact(k5, 0, 3, 1) == -1);  // 0 loops, 1 edge
  CHECK(path_difference_exact(k5, 0, 3, 2) == 1);   // 4 closed vs 3 crossing

  Rng rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    GadgetGraph g = signed_to_adjacency(random_signed(3, 0.6, rng));
    for (Index m = 0; m <= 5; ++m) {
      const auto u = walk_counts(g.graph, 0, m);
      for (Index v = 0; v < g.graph.dim(); ++v)
        CHECK(u[static_cast<std::size_t>(v)] ==
              testing::count_walks_brute(g.graph, 0, v, m));
    }
  }
}

TEST_CASE("walk counting overflows loudly") {
  RegularGraph k5 = complete_graph(5);
  CHECK_THROWS_AS(path_difference_exact(k5, 0, 1, 40), std::overflow_error);
}

TEST_CASE("pair form: <psi-|A~^m|psi-> equals the walk difference under the automorphism") {
  Rng rng(2244);
  for (int trial = 0; trial < 6; ++trial) {
    SignedSparseMatrix a = random_signed(2 + rng.next_below(4), 0.6, rng);
    GadgetGraph g = signed_to_adjacency(a);
    DenseHermitian tilde = materialize(g.graph.adjacency());
    const Index m = 1 + static_cast<Index>(rng.next_below(6));
    RMat power = matrix_power(tilde, m).real_part();
    const Index j = rng.next_below(a.dim());
    const auto [q, r] = g.pair_of(j);
    // Quadratic form at (|q> - |r>)/sqrt2.
    const double form =
        0.5 * (power(q, q) + power(r, r)) - power(q, r);
    const double delta = static_cast<double>(path_difference_exact(g.graph, q, r, m));
    CHECK(power(q, q) == power(r, r));  // automorphism makes these equal
    CHECK(form == doctest::Approx(delta));
  }
}

TEST_CASE("reduction identity: diagonal powers equal walk differences exactly") {
  // [[-1]]: Delta^m = (-1)^m.
  RMat minus(1, 1);
  minus << -1.0;
  ReductionIdentityReport r0 = verify_reduction_identity(signed_from_dense(minus), 0, 10);
  CHECK(r0.identity_holds);
  CHECK(r0.growth_bound_holds);

  // Clock instance, M = 3, width 1.
  GateCircuit u;
  u.width = 1;
  u.input_bits = {0};
  u.gates = {Gate::h(0), Gate::h(0), Gate::h(0)};
  ClockHermitian clock = build_clock_hermitian(u);
  ReductionIdentityReport r1 =
      verify_reduction_identity(SignedSparseMatrix(clock.a_matrix, true),
                                clock.start_index, 10);
  CHECK(r1.identity_holds);
  CHECK(r1.growth_bound_holds);
  CHECK(r1.matrix_norm == doctest::Approx(2.0 * std::sqrt(2.0)));

  Rng rng(9090);
  for (int trial = 0; trial < 5; ++trial) {
    SignedSparseMatrix a = random_signed(2 + rng.next_below(5), 0.5, rng);
    ReductionIdentityReport r = verify_reduction_identity(a, rng.next_below(a.dim()), 8);
    CHECK(r.identity_holds);
    CHECK(r.growth_bound_holds);
  }
}

TEST_CASE("decide_path_difference: exact verdicts on K5") {
  PathDifferenceInstance inst;
  inst.graph = complete_graph(5);
  inst.q = 0;
  inst.r = 1;
  inst.m = 2;
  inst.g = 0.0;
  inst.epsilon = 0.5;
  inst.growth_bound = 1.0;  // sup_n |Delta^n|^{1/n} = 1 on K5
  inst.automorphism = Permutation::transposition(5, 0, 1);

  PathDecision d = decide_path_difference(inst, Method::exact);
  CHECK(d.verdict == PathVerdict::ge);
  CHECK(d.estimate == 1.0);

  inst.m = 1;  // Delta = -1
  d = decide_path_difference(inst, Method::exact);
  CHECK(d.verdict == PathVerdict::le);

  inst.g = -1.0;  // Delta sits exactly on g: inside the open promise gap
  d = decide_path_difference(inst, Method::exact);
  CHECK(d.verdict == PathVerdict::promise_violated);
}

TEST_CASE("decide_path_difference: missing automorphism is an error") {
  PathDifferenceInstance inst;
  inst.graph = complete_graph(4);
  inst.q = 0;
  inst.r = 1;
  inst.m = 1;
  inst.epsilon = 0.3;
  inst.growth_bound = 3.0;
  inst.automorphism = Permutation::identity(4);  // does not exchange q, r
  CHECK_THROWS(decide_path_difference(inst, Method::exact));
}

TEST_CASE("decide_path_difference: sampling agrees with exact on promise instances") {
  PathDifferenceInstance inst;
  inst.graph = complete_graph(5);
  inst.q = 0;
  inst.r = 1;
  inst.m = 2;
  inst.g = 0.0;
  inst.epsilon = 0.5;
  inst.growth_bound = 1.0;
  inst.automorphism = Permutation::transposition(5, 0, 1);
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    PathDecision d = decide_path_difference(inst, Method::quantum_sim, seed);
    CHECK(d.verdict == PathVerdict::ge);
    REQUIRE(d.budget.has_value());
    CHECK(d.budget->p >= 1);
  }
}

TEST_CASE("three counting routes agree: DP, matrix_power, eigendecomposition") {
  Rng rng(515);
  GadgetGraph g = signed_to_adjacency(random_signed(3, 0.7, rng));
  DenseHermitian tilde = materialize(g.graph.adjacency());
  EigenSystem es = eig(tilde);
  for (Index m = 0; m <= 6; ++m) {
    RMat power = matrix_power(tilde, m).real_part();
    for (Index j = 0; j < 3; ++j) {
      const auto [q, r] = g.pair_of(j);
      const double delta_dp =
          static_cast<double>(path_difference_exact(g.graph, q, r, m));
      const double delta_mp = power(q, q) - power(q, r);
      double delta_eig = 0.0;
      for (Index i = 0; i < es.eigenvalues.size(); ++i) {
        const double vq = es.eigenvectors(q, i).real();
        const double vr = es.eigenvectors(r, i).real();
        delta_eig += vq * (vq - vr) *
                     std::pow(es.eigenvalues[i], static_cast<double>(m));
      }
      CHECK(delta_mp == delta_dp);
      CHECK(delta_eig == doctest::Approx(delta_dp).epsilon(1e-9));
    }
  }
}
