// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gates.hpp"

namespace quarch {

inline constexpr int kMaxQubits = 15;  // dense simulator cap

struct Instruction {
  GateKind kind;
  int q0 = 0;
  int q1 = -1;            // second operand for two-qubit gates, else -1
  double theta = 0.0;     // R: theta; XX/ZX: chi
  double phi = 0.0;       // R only

  bool operator==(const Instruction&) const = default;
};

Instruction make_r(int q, double theta, double phi);
Instruction make_gate1(GateKind k, int q);
Instruction make_gate2(GateKind k, int a, int b, double chi = 0.0);

// An immutable-by-convention quantum program: basis-state preparation,
// ordered gate list, terminal measurement of a subset of qubits.
struct Circuit {
  int n_qubits = 0;
  std::vector<Instruction> instructions;
  std::vector<int> measured;        // terminal measurement, order preserved
  std::vector<bool> initial_ones;   // size n_qubits; true = prepared in |1>

  explicit Circuit(int n = 0)
      : n_qubits(n), initial_ones(static_cast<std::size_t>(n), false) {}

  void add(const Instruction& inst) { instructions.push_back(inst); }
};

// Returns every invariant violation (empty = valid). Total: never throws on
// structurally well-formed input.
std::vector<std::string> validate(const Circuit& c);

// Throws std::invalid_argument listing all violations if validate() is
// non-empty.
void require_valid(const Circuit& c);

int two_qubit_gate_count(const Circuit& c);

// Line-oriented text format, bit-exact round trip:
//   qubits N
//   ones i,j          (omitted when no qubit starts in |1>)
//   GATE q0 [q1] [name=value ...]
//   measure i,j       (omitted when nothing is measured)
// '#' starts a comment; blank lines ignored.
std::string format_circuit(const Circuit& c);
Circuit parse_circuit(const std::string& text);

}  // namespace quarch
