// Gate circuits over the {Hadamard, Hadamard.Toffoli} universal set (plus
// the PauliZ used between a circuit and its adjoint), their statevector
// semantics, and the clock construction
//
//   W = sum_l |l+1><l| (x) U_l      (clock index mod M, M odd >= 3)
//   A = sqrt(2) * (W + W*)
//
// together with the closed-form spectral measure induced by A at the
// start state |0> (x) |x, 0>.
//
// Conventions.  Wire 0 is the output qubit; basis index bit w is wire w.
// The `ht` gate applies the Toffoli first and then the Hadamard on the
// target (matrix H_t * T); its adjoint `th` is a first-class gate kind so
// that a circuit followed by its gate-by-gate adjoint stays in the set.
// Hadamard-kind gates have exactly two nonzeros of +/-1/sqrt(2) per row,
// so every row of A built from them has exactly 4 entries of +/-1.  A
// bare `z` layer has one nonzero per row and breaks that count in the
// adjacent clock sectors; verify_clock_rows reports such rows instead of
// assuming the 4-entry structure.

#pragma once

#include "specwalk/linalg.hpp"
#include "specwalk/sparse.hpp"
#include "specwalk/types.hpp"

#include <string>
#include <vector>

namespace specwalk {

enum class GateKind { Hadamard, HadamardToffoli, ToffoliHadamard, PauliZ };

struct Gate {
  GateKind kind = GateKind::Hadamard;
  int target = 0;
  int control1 = -1;
  int control2 = -1;

  static Gate h(int t) { return {GateKind::Hadamard, t, -1, -1}; }
  static Gate ht(int c1, int c2, int t) { return {GateKind::HadamardToffoli, t, c1, c2}; }
  static Gate th(int c1, int c2, int t) { return {GateKind::ToffoliHadamard, t, c1, c2}; }
  static Gate z(int t) { return {GateKind::PauliZ, t, -1, -1}; }

  Gate adjoint() const;
  // Hadamard kinds: two +/-1/sqrt(2) entries per row.
  bool two_sparse() const { return kind != GateKind::PauliZ; }
};

struct GateCircuit {
  int width = 1;                 // qubit count r + l
  std::vector<int> input_bits;   // classical string x (length r <= width)
  std::vector<Gate> gates;       // applied first to last

  void validate() const;
  Index dim() const { return Index{1} << width; }
  // Flat index of |x, 0>: bit w of the index is wire w.
  Index start_index() const;
};

// Statevector cap for full simulation (qubits).
inline constexpr int statevector_cap = 20;

// Applies one gate in place to a 2^width statevector.
void apply_gate(const Gate& g, int width, CVec& psi);

// Applies the whole circuit to |x, 0>.
CVec apply_circuit(const GateCircuit& c);

// Row i of the gate's 2^width matrix, sorted by column; and the matching
// column structure (row i of the transpose).
SparseRow gate_row(const Gate& g, int width, Index i);
SparseRow gate_col(const Gate& g, int width, Index i);

// Y followed by PauliZ on the output qubit followed by the gate-by-gate
// adjoint of Y in reverse order.  Gate count 2k+1, always odd.
GateCircuit build_u_circuit(const GateCircuit& y);

// |alpha_1|^2: probability of measuring the output qubit as 1 after
// applying Y to |x, 0>.
double acceptance_probability(const GateCircuit& y);

// For a circuit whose total unitary U is an involution (U^2 = 1), the
// weight of the (-1)-eigenspace in the start state: (1 - <s|U|s>)/2.
// Throws if U is detectably not an involution.
double involution_alpha1_sq(const GateCircuit& u);

struct ClockHermitian {
  Index clock_size = 0;   // M
  Index system_dim = 0;   // 2^width
  Index start_index = 0;  // flat index of |0> (x) |x,0>
  SparseSymmetricMatrix a_matrix;  // sqrt(2) * (W + W*)
  // True when every layer is a Hadamard-kind gate, in which case a_matrix
  // has integer entries +/-1 with exactly 4 per row.
  bool two_sparse_layers = false;
  GateCircuit circuit;

  // Spectrum of a_matrix at the start state = scale * (unit measure).
  static constexpr double eigenvalue_scale = 2.8284271247461903;  // 2*sqrt(2)
  Index dim() const { return clock_size * system_dim; }
};

ClockHermitian build_clock_hermitian(const GateCircuit& u);

// Per-row audit of the 4-entries / integer-entries claim.
struct ClockRowReport {
  Index rows_checked = 0;
  Index rows_not_four_entries = 0;
  Index rows_noninteger = 0;
  bool clean() const { return rows_not_four_entries == 0 && rows_noninteger == 0; }
};
ClockRowReport verify_clock_rows(const ClockHermitian& clock);

// Closed-form spectral measure for an odd clock of M layers:
//   P = (1 - a1) P0 + a1 P1,
//   P0 on cos(2 pi l / M), weight 1/M at l = 0 and 2/M for l = 1..(M-1)/2,
//   P1 on cos(pi (2l+1) / M), weight 2/M for l < (M-1)/2 and 1/M at the end.
// Values are on the unit normalization; the clock matrix spectrum is this
// measure scaled by ClockHermitian::eigenvalue_scale.
struct AnalyticSpectralMeasure {
  Index clock_size = 0;
  double alpha1_sq = 0.0;
  std::vector<double> support0, weights0;
  std::vector<double> support1, weights1;

  // Combined convex mixture, ascending, zero-weight points dropped.
  SpectralMeasure measure() const;
};

AnalyticSpectralMeasure analytic_measure(Index m_gates, double alpha1_sq);

// m-th moment of the unit-normalized measure.
double analytic_moment(const AnalyticSpectralMeasure& measure, Index m);

// Circuit text format:
//   circuit <width> <input-bits>      (input-bits: 0/1 string, or - if empty)
//   h <t> | ht <c1> <c2> <t> | th <c1> <c2> <t> | z <t>
GateCircuit load_circuit(const std::string& path);
void save_circuit(const GateCircuit& c, const std::string& path);

}  // namespace specwalk
