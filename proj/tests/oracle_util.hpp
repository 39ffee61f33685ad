// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent brute-force oracle used by the simulator tests: builds each
// gate as an explicit 2^n x 2^n matrix, multiplies the full circuit
// unitary together, and applies it to the prepared basis vector. No code
// is shared with the production state-vector path beyond the 2x2 / 4x4
// gate matrices themselves.
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "circuit.hpp"
#include "statevector.hpp"

namespace oracle {

using Cx = std::complex<double>;
using DenseMatrix = std::vector<std::vector<Cx>>;

inline DenseMatrix identity(std::size_t dim) {
  DenseMatrix m(dim, std::vector<Cx>(dim, Cx{0, 0}));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = Cx{1, 0};
  return m;
}

inline DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  const std::size_t dim = a.size();
  DenseMatrix out(dim, std::vector<Cx>(dim, Cx{0, 0}));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t j = 0; j < dim; ++j)
        out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Expands a gate to the full register. Qubit 0 is the most significant
// index bit; a two-qubit gate's first operand is the most significant of
// the pair.
inline DenseMatrix expand(const quarch::Instruction& inst, int n) {
  const std::size_t dim = std::size_t{1} << n;
  DenseMatrix out(dim, std::vector<Cx>(dim, Cx{0, 0}));
  if (quarch::arity(inst.kind) == 1) {
    const quarch::Mat2 u = quarch::unitary1(inst);
    const int shift = n - 1 - inst.q0;
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t b = (col >> shift) & 1u;
      for (std::size_t bp = 0; bp < 2; ++bp) {
        const std::size_t row = (col & ~(std::size_t{1} << shift)) |
                                (bp << shift);
        out[row][col] += u[bp * 2 + b];
      }
    }
  } else {
    const quarch::Mat4 u = quarch::unitary2(inst);
    const int sa = n - 1 - inst.q0, sb = n - 1 - inst.q1;
    for (std::size_t col = 0; col < dim; ++col) {
      const std::size_t ka = (col >> sa) & 1u, kb = (col >> sb) & 1u;
      const std::size_t k = ka * 2 + kb;
      for (std::size_t kp = 0; kp < 4; ++kp) {
        const std::size_t row =
            (col & ~(std::size_t{1} << sa) & ~(std::size_t{1} << sb)) |
            ((kp >> 1) << sa) | ((kp & 1u) << sb);
        out[row][col] += u[kp * 4 + k];
      }
    }
  }
  return out;
}

// Full matrix-product evaluation of a circuit on its prepared state.
inline std::vector<Cx> evaluate(const quarch::Circuit& c) {
  const std::size_t dim = std::size_t{1} << c.n_qubits;
  DenseMatrix u = identity(dim);
  for (const quarch::Instruction& inst : c.instructions)
    u = matmul(expand(inst, c.n_qubits), u);
  std::size_t prep = 0;
  for (int q = 0; q < c.n_qubits; ++q)
    if (c.initial_ones[static_cast<std::size_t>(q)])
      prep |= std::size_t{1} << (c.n_qubits - 1 - q);
  std::vector<Cx> out(dim, Cx{0, 0});
  for (std::size_t i = 0; i < dim; ++i) out[i] = u[i][prep];
  return out;
}

}  // namespace oracle
