// The shared clock-instance suite: circuits of width <= 6 with clock
// sizes up to M = 15, mixing PauliZ-closed circuits (which reach the
// deterministic corners but block the 0/1 gadget) and Hadamard-closed
// ones (integer +/-1 matrices that feed the gadget and walk chain).

#pragma once

#include "specwalk/circuits.hpp"
#include "specwalk/fixtures.hpp"

#include <string>
#include <vector>

namespace specwalk::testing {

struct ClockCase {
  std::string name;
  GateCircuit u;
};

inline std::vector<ClockCase> clock_suite() {
  std::vector<ClockCase> suite;
  auto add = [&suite](std::string name, GateCircuit u) {
    suite.push_back({std::move(name), std::move(u)});
  };

  // Deterministic PauliZ closures, M = 3.
  add("z_m3_w2_reject", build_u_circuit(deterministic_circuit(2, 1, {0, 0})));
  add("z_m3_w2_accept", build_u_circuit(deterministic_circuit(2, 1, {1, 0})));

  // Single-wire clock: U = H H H = H, an involution on the output itself.
  {
    GateCircuit u;
    u.width = 1;
    u.input_bits = {0};
    u.gates = {Gate::h(0), Gate::h(0), Gate::h(0)};
    add("h_m3_w1", u);
  }

  // Balanced and biased mixes.
  {
    GateCircuit y;
    y.width = 2;
    y.input_bits = {0, 0};
    y.gates = {Gate::h(0), Gate::h(1)};
    add("z_m5_w2_half", build_u_circuit(y));
  }
  add("h_m5_w2", hadamard_involution(deterministic_circuit(2, 2, {1, 0})));
  {
    GateCircuit y;
    y.width = 3;
    y.input_bits = {0, 1, 1};
    y.gates = {Gate::ht(1, 2, 0), Gate::h(0), Gate::h(1)};
    add("z_m7_w3", build_u_circuit(y));
  }
  {
    GateCircuit y;
    y.width = 3;
    y.input_bits = {0, 1, 1};
    y.gates = {Gate::ht(1, 2, 0), Gate::h(1), Gate::h(2)};
    add("h_m7_w3", hadamard_involution(y));
  }
  {
    GateCircuit y;
    y.width = 4;
    y.input_bits = {0, 1, 1, 0};
    y.gates = {Gate::h(3), Gate::ht(1, 2, 0), Gate::h(3), Gate::h(0)};
    add("z_m9_w4", build_u_circuit(y));
  }
  {
    GateCircuit y;
    y.width = 4;
    y.input_bits = {0, 1, 0, 1};
    y.gates = {Gate::ht(2, 3, 0), Gate::h(1), Gate::ht(1, 3, 0), Gate::h(2)};
    add("h_m9_w4", hadamard_involution(y));
  }
  {
    GateCircuit y;
    y.width = 4;
    y.input_bits = {0, 1, 1, 1};
    y.gates = {Gate::h(0), Gate::ht(1, 2, 3), Gate::h(2), Gate::ht(2, 3, 0),
               Gate::h(1), Gate::h(3)};
    add("z_m13_w4", build_u_circuit(y));
  }
  {
    GateCircuit y;
    y.width = 5;
    y.input_bits = {0, 1, 1, 0, 1};
    y.gates = {Gate::ht(1, 2, 0), Gate::h(3), Gate::ht(3, 4, 2), Gate::h(4),
               Gate::h(0)};
    add("h_m11_w5", hadamard_involution(y));
  }
  {
    GateCircuit y;
    y.width = 2;
    y.input_bits = {1, 1};
    y.gates = {Gate::h(0), Gate::h(1), Gate::h(0), Gate::h(1), Gate::h(0),
               Gate::h(1), Gate::h(0)};
    add("z_m15_w2", build_u_circuit(y));
  }
  add("h_m3_w6", hadamard_involution(deterministic_circuit(6, 1, {1, 1, 0, 1, 0, 1})));
  {
    GateCircuit y;
    y.width = 6;
    y.input_bits = {0, 1, 1, 0, 1, 1};
    y.gates = {Gate::ht(1, 2, 0), Gate::h(3), Gate::ht(4, 5, 3), Gate::h(1),
               Gate::ht(2, 4, 5), Gate::h(2), Gate::h(0)};
    add("h_m15_w6", hadamard_involution(y));
  }
  {
    GateCircuit y;
    y.width = 6;
    y.input_bits = {0, 0, 1, 1, 0, 0};
    y.gates = {Gate::h(0), Gate::ht(2, 3, 1)};
    add("z_m5_w6", build_u_circuit(y));
  }
  return suite;
}

}  // namespace specwalk::testing
