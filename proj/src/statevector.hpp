// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "unitary.hpp"

namespace quarch {

// Dense state vector over n <= 15 qubits. Qubit 0 is the most significant
// bit of the basis-state index (matching the |q0 q1 ...> labels used for
// the gate matrices).
class StateVector {
 public:
  explicit StateVector(int n);

  int n() const { return n_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }
  std::vector<Complex>& amplitudes() { return amps_; }

  void set_basis_state(const std::vector<bool>& ones);

  void apply1(int q, const Mat2& u);
  void apply2(int qa, int qb, const Mat4& u);  // qa = most significant operand
  void apply(const Instruction& inst);

  double norm_squared() const;

  // Marginal probabilities of the measured qubits, indexed by the integer
  // whose bits follow the order of `measured` (first listed = MSB).
  std::vector<double> marginal_probs(const std::vector<int>& measured) const;

  // One full-register sample; returns the basis index. u in [0,1).
  std::uint64_t sample_index(double u) const;

 private:
  int n_;
  std::vector<Complex> amps_;
};

struct Histogram {
  std::map<std::string, std::int64_t> counts;
  std::int64_t shots = 0;
};

// Unitary of a gate instruction (native or standard), as it acts on the
// operand subspace.
Mat2 unitary1(const Instruction& inst);
Mat4 unitary2(const Instruction& inst);

StateVector run_ideal(const Circuit& c);

// Extracts the bits of `measured` (in list order) from a full-register index.
std::string bits_of_index(std::uint64_t index, int n,
                          const std::vector<int>& measured);

// Multinomial sampling of the measured-qubit marginal; deterministic in seed.
Histogram sample(const StateVector& state, const std::vector<int>& measured,
                 std::int64_t shots, std::uint64_t seed);

// (p_hat, Wald 95% CI half-width) for counting `ideal` in h.
std::pair<double, double> success_probability(const Histogram& h,
                                              const std::string& ideal);

}  // namespace quarch
