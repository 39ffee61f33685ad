// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rng.hpp"

namespace quarch {

StateVector::StateVector(int n) : n_(n) {
  if (n < 0 || n > kMaxQubits)
    throw std::invalid_argument("state size out of range: " +
                                std::to_string(n));
  amps_.assign(std::size_t{1} << n, Complex{0, 0});
  if (!amps_.empty()) amps_[0] = Complex{1, 0};
}

void StateVector::set_basis_state(const std::vector<bool>& ones) {
  std::uint64_t index = 0;
  for (int q = 0; q < n_; ++q)
    if (ones[static_cast<std::size_t>(q)])
      index |= std::uint64_t{1} << (n_ - 1 - q);
  std::fill(amps_.begin(), amps_.end(), Complex{0, 0});
  amps_[index] = Complex{1, 0};
}

void StateVector::apply1(int q, const Mat2& u) {
  if (q < 0 || q >= n_) throw std::invalid_argument("operand out of range");
  const std::uint64_t bit = std::uint64_t{1} << (n_ - 1 - q);
  const std::uint64_t size = amps_.size();
  for (std::uint64_t i = 0; i < size; ++i) {
    if (i & bit) continue;
    const Complex a0 = amps_[i];
    const Complex a1 = amps_[i | bit];
    amps_[i] = u[0] * a0 + u[1] * a1;
    amps_[i | bit] = u[2] * a0 + u[3] * a1;
  }
}

void StateVector::apply2(int qa, int qb, const Mat4& u) {
  if (qa < 0 || qa >= n_ || qb < 0 || qb >= n_ || qa == qb)
    throw std::invalid_argument("operands out of range");
  const std::uint64_t bit_a = std::uint64_t{1} << (n_ - 1 - qa);
  const std::uint64_t bit_b = std::uint64_t{1} << (n_ - 1 - qb);
  const std::uint64_t size = amps_.size();
  for (std::uint64_t i = 0; i < size; ++i) {
    if ((i & bit_a) || (i & bit_b)) continue;
    const std::uint64_t i00 = i;
    const std::uint64_t i01 = i | bit_b;
    const std::uint64_t i10 = i | bit_a;
    const std::uint64_t i11 = i | bit_a | bit_b;
    const Complex a00 = amps_[i00];
    const Complex a01 = amps_[i01];
    const Complex a10 = amps_[i10];
    const Complex a11 = amps_[i11];
    amps_[i00] = u[0] * a00 + u[1] * a01 + u[2] * a10 + u[3] * a11;
    amps_[i01] = u[4] * a00 + u[5] * a01 + u[6] * a10 + u[7] * a11;
    amps_[i10] = u[8] * a00 + u[9] * a01 + u[10] * a10 + u[11] * a11;
    amps_[i11] = u[12] * a00 + u[13] * a01 + u[14] * a10 + u[15] * a11;
  }
}

Mat2 unitary1(const Instruction& inst) {
  switch (inst.kind) {
    case GateKind::H: return h_matrix();
    case GateKind::T: return t_matrix();
    case GateKind::X: return x_matrix();
    case GateKind::Y: return y_matrix();
    case GateKind::Z: return z_matrix();
    case GateKind::R: return r_matrix(inst.theta, inst.phi);
    default:
      throw std::invalid_argument("not a single-qubit gate");
  }
}

Mat4 unitary2(const Instruction& inst) {
  switch (inst.kind) {
    case GateKind::CNOT: return cnot_matrix();
    case GateKind::SWAP: return swap_matrix();
    case GateKind::CZ: return cz_matrix();
    case GateKind::XX: return xx_matrix(inst.theta);
    case GateKind::ZX: return zx_matrix(inst.theta);
    default:
      throw std::invalid_argument("not a two-qubit gate");
  }
}

void StateVector::apply(const Instruction& inst) {
  if (arity(inst.kind) == 1)
    apply1(inst.q0, unitary1(inst));
  else
    apply2(inst.q0, inst.q1, unitary2(inst));
}

double StateVector::norm_squared() const {
  double s = 0;
  for (const Complex& a : amps_) s += std::norm(a);
  return s;
}

std::vector<double> StateVector::marginal_probs(
    const std::vector<int>& measured) const {
  if (measured.empty()) throw std::invalid_argument("empty measurement list");
  const std::size_t k = measured.size();
  std::vector<double> probs(std::size_t{1} << k, 0.0);
  const std::uint64_t size = amps_.size();
  for (std::uint64_t i = 0; i < size; ++i) {
    const double p = std::norm(amps_[i]);
    if (p == 0.0) continue;
    std::uint64_t out = 0;
    for (std::size_t j = 0; j < k; ++j) {
      out <<= 1;
      if (i & (std::uint64_t{1} << (n_ - 1 - measured[j]))) out |= 1;
    }
    probs[out] += p;
  }
  return probs;
}

std::uint64_t StateVector::sample_index(double u) const {
  double acc = 0;
  const std::uint64_t size = amps_.size();
  for (std::uint64_t i = 0; i < size; ++i) {
    acc += std::norm(amps_[i]);
    if (u < acc) return i;
  }
  return size - 1;  // numerical tail
}

StateVector run_ideal(const Circuit& c) {
  require_valid(c);
  StateVector state(c.n_qubits);
  state.set_basis_state(c.initial_ones);
  for (const Instruction& inst : c.instructions) state.apply(inst);
  return state;
}

std::string bits_of_index(std::uint64_t index, int n,
                          const std::vector<int>& measured) {
  std::string out(measured.size(), '0');
  for (std::size_t j = 0; j < measured.size(); ++j)
    if (index & (std::uint64_t{1} << (n - 1 - measured[j]))) out[j] = '1';
  return out;
}

Histogram sample(const StateVector& state, const std::vector<int>& measured,
                 std::int64_t shots, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (measured.empty()) throw std::invalid_argument("empty measurement list");
  const std::vector<double> probs = state.marginal_probs(measured);
  std::vector<double> cumulative(probs.size());
  double acc = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cumulative[i] = acc;
  }
  std::mt19937_64 rng = make_rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const std::size_t k = measured.size();
  Histogram h;
  h.shots = shots;
  for (std::int64_t s = 0; s < shots; ++s) {
    const double u = uniform(rng) * acc;
    std::size_t lo = 0, hi = cumulative.size() - 1;
    while (lo < hi) {
      const std::size_t mid = (lo + hi) / 2;
      if (u < cumulative[mid])
        hi = mid;
      else
        lo = mid + 1;
    }
    std::string bits(k, '0');
    for (std::size_t j = 0; j < k; ++j)
      if (lo & (std::size_t{1} << (k - 1 - j))) bits[j] = '1';
    ++h.counts[bits];
  }
  return h;
}

std::pair<double, double> success_probability(const Histogram& h,
                                              const std::string& ideal) {
  if (h.shots < 1) throw std::invalid_argument("histogram has no shots");
  const auto it = h.counts.find(ideal);
  const std::int64_t hits = it == h.counts.end() ? 0 : it->second;
  const double p = static_cast<double>(hits) / static_cast<double>(h.shots);
  const double half =
      1.96 * std::sqrt(p * (1.0 - p) / static_cast<double>(h.shots));
  return {p, half};
}

}  // namespace quarch
