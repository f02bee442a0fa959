// Deterministic instance generators for the test suites and the CLI.

#pragma once

#include "specwalk/circuits.hpp"
#include "specwalk/graph.hpp"

#include <cstdint>

namespace specwalk {

// K_n: degree n-1, no self-loops.  The transposition (0 1) exchanges the
// default distinguished pair.
RegularGraph complete_graph(Index n);

// Cycle on n >= 3 vertices, degree 2; the reflection v -> (1 - v) mod n
// exchanges 0 and 1.
RegularGraph cycle_graph(Index n);
Permutation cycle_reflection(Index n);

// Random d-regular simple graph by the pairing model: stubs are shuffled
// and paired, rejecting self-edges and multi-edges until a simple regular
// graph appears.  Requires d < n and even d*n.
RegularGraph random_regular_graph(Index n, Index degree, std::uint64_t seed);

// Small named circuits used across the suites.  Width >= 2; wire 0 is the
// output.  "deterministic" circuits act only on wire 1, so acceptance is
// exactly the input bit x0; gate_count sets the clock size M = 2k+1.
GateCircuit deterministic_circuit(int width, int gate_count, std::vector<int> input_bits);

// Involution built as Y + middle Hadamard on wire 0 + reversed adjoint of
// Y; stays in the Hadamard-kind set, so its clock matrix feeds the gadget.
GateCircuit hadamard_involution(const GateCircuit& y);

}  // namespace specwalk
