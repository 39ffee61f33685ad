// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "noise.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "gates.hpp"

namespace quarch {

namespace {

constexpr double kPi = std::numbers::pi;

// Is theta a pi pulse (theta = pi mod 2*pi)? Such pulses toggle the wire's
// drive-error sign; see run_noisy's contract comment.
bool is_pi_pulse(double theta) {
  return std::abs(std::remainder(theta, 2.0 * kPi)) > kPi - 1e-9;
}

const Mat2& pauli_matrix(int k) {  // 1 = X, 2 = Y, 3 = Z
  static const Mat2 mats[3] = {x_matrix(), y_matrix(), z_matrix()};
  return mats[k - 1];
}

struct ShotPlan {
  const Circuit* c;
  const NoiseProfile* p;
  // Per-instruction crosstalk spectators (compact indices, ascending);
  // indexed like c->instructions, empty for single-qubit gates.
  std::vector<std::vector<int>> spectators;
  double run_offset = 0.0;
};

void run_shot_range(const ShotPlan& plan, std::uint64_t seed,
                    std::int64_t begin, std::int64_t end,
                    std::map<std::string, std::int64_t>& counts) {
  const Circuit& c = *plan.c;
  const NoiseProfile& prof = *plan.p;
  std::uniform_real_distribution<double> unif(0.0, 1.0);

  for (std::int64_t s = begin; s < end; ++s) {
    std::mt19937_64 rng = make_rng(derive_seed(seed, static_cast<std::uint64_t>(s)));
    double delta = prof.coherent.bias + plan.run_offset;
    if (prof.coherent.sigma > 0) {
      std::normal_distribution<double> gauss(0.0, prof.coherent.sigma);
      delta += gauss(rng);
    }

    StateVector psi(c.n_qubits);
    psi.set_basis_state(c.initial_ones);
    std::vector<std::uint8_t> parity(static_cast<std::size_t>(c.n_qubits), 0);

    for (std::size_t gi = 0; gi < c.instructions.size(); ++gi) {
      const Instruction& inst = c.instructions[gi];
      const double sign =
          parity[static_cast<std::size_t>(inst.q0)] ? -1.0 : 1.0;
      switch (inst.kind) {
        case GateKind::R:
          psi.apply1(inst.q0, r_matrix(inst.theta, inst.phi));
          if (is_pi_pulse(inst.theta))
            parity[static_cast<std::size_t>(inst.q0)] ^= 1;
          break;
        case GateKind::H:
          psi.apply1(inst.q0, h_matrix());
          parity[static_cast<std::size_t>(inst.q0)] ^= 1;
          break;
        case GateKind::X:
          psi.apply1(inst.q0, x_matrix());
          parity[static_cast<std::size_t>(inst.q0)] ^= 1;
          break;
        case GateKind::Y:
          psi.apply1(inst.q0, y_matrix());
          parity[static_cast<std::size_t>(inst.q0)] ^= 1;
          break;
        case GateKind::T:
          psi.apply1(inst.q0, t_matrix());
          break;
        case GateKind::Z:
          psi.apply1(inst.q0, z_matrix());
          break;
        case GateKind::CZ:
          psi.apply2(inst.q0, inst.q1, cz_overrotated(sign * delta));
          break;
        case GateKind::XX:
          psi.apply2(inst.q0, inst.q1, xx_matrix(inst.theta + sign * delta));
          break;
        case GateKind::ZX:
          psi.apply2(inst.q0, inst.q1, zx_matrix(inst.theta + sign * delta));
          break;
        case GateKind::CNOT:  // composite gates run error-free of the drive
          psi.apply2(inst.q0, inst.q1, cnot_matrix());
          break;
        case GateKind::SWAP:
          psi.apply2(inst.q0, inst.q1, swap_matrix());
          break;
      }

      // Depolarizing insertion. Inserted Paulis are stochastic events, not
      // programmed pulses: they do not toggle the drive-error parity.
      if (arity(inst.kind) == 1) {
        if (prof.depol.p1 > 0 && unif(rng) < prof.depol.p1) {
          std::uniform_int_distribution<int> pick(1, 3);
          psi.apply1(inst.q0, pauli_matrix(pick(rng)));
        }
      } else {
        if (prof.depol.p2 > 0 && unif(rng) < prof.depol.p2) {
          std::uniform_int_distribution<int> pick(1, 15);
          const int k = pick(rng);
          const int pa = k >> 2, pb = k & 3;
          if (pa) psi.apply1(inst.q0, pauli_matrix(pa));
          if (pb) psi.apply1(inst.q1, pauli_matrix(pb));
        }
        if (prof.crosstalk.p_ct > 0) {
          for (int spec : plan.spectators[gi]) {
            if (unif(rng) < prof.crosstalk.p_ct) {
              std::uniform_int_distribution<int> pick(1, 3);
              psi.apply1(spec, pauli_matrix(pick(rng)));
            }
          }
        }
      }
    }

    const std::vector<double> probs = psi.marginal_probs(c.measured);
    const double u = unif(rng);
    double acc = 0.0;
    std::size_t outcome = probs.size() - 1;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      acc += probs[i];
      if (u < acc) {
        outcome = i;
        break;
      }
    }
    std::string bits(c.measured.size(), '0');
    for (std::size_t i = 0; i < bits.size(); ++i)
      if (outcome >> (bits.size() - 1 - i) & 1ULL) bits[i] = '1';

    for (char& b : bits) {
      const double p =
          (b == '0') ? prof.spam.p_read_0 : prof.spam.p_read_1;
      if (p > 0 && unif(rng) < p) b = (b == '0') ? '1' : '0';
    }
    ++counts[bits];
  }
}

}  // namespace

std::string apply_readout_error(const std::string& bits, const SpamModel& spam,
                                std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::string out = bits;
  for (char& b : out) {
    const double p = (b == '0') ? spam.p_read_0 : spam.p_read_1;
    if (p > 0 && unif(rng) < p) b = (b == '0') ? '1' : '0';
  }
  return out;
}

Histogram run_noisy(const Circuit& c, const NoiseProfile& profile,
                    std::int64_t shots, std::uint64_t seed,
                    const Topology* topo,
                    const std::vector<int>* device_of_compact) {
  require_valid(c);
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  if (c.measured.empty())
    throw std::invalid_argument("empty measurement list");

  ShotPlan plan{&c, &profile, {}, 0.0};
  plan.spectators.resize(c.instructions.size());
  if (profile.crosstalk.p_ct > 0) {
    if (topo == nullptr || device_of_compact == nullptr)
      throw std::invalid_argument("crosstalk requires a topology");
    if (static_cast<int>(device_of_compact->size()) != c.n_qubits)
      throw std::invalid_argument("device map size mismatch");
    std::vector<int> compact_of_device(
        static_cast<std::size_t>(topo->n_qubits), -1);
    for (std::size_t i = 0; i < device_of_compact->size(); ++i)
      compact_of_device[static_cast<std::size_t>((*device_of_compact)[i])] =
          static_cast<int>(i);
    for (std::size_t gi = 0; gi < c.instructions.size(); ++gi) {
      const Instruction& inst = c.instructions[gi];
      if (arity(inst.kind) != 2) continue;
      std::vector<int>& specs = plan.spectators[gi];
      for (int operand : {inst.q0, inst.q1}) {
        const int dev = (*device_of_compact)[static_cast<std::size_t>(operand)];
        for (int nb : topo->neighbors(dev)) {
          const int compact = compact_of_device[static_cast<std::size_t>(nb)];
          // Spectators compacted out of the circuit hold no simulated
          // state; their flips are unobservable and skipped.
          if (compact >= 0 && compact != inst.q0 && compact != inst.q1)
            specs.push_back(compact);
        }
      }
      std::sort(specs.begin(), specs.end());
      specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
    }
  }
  if (profile.coherent.run_jitter > 0) {
    // One offset for the whole run, from a stream separate from any shot's.
    std::mt19937_64 rng =
        make_rng(derive_seed(seed, 0x72756e6f666673ULL));  // "runoffs"
    std::normal_distribution<double> gauss(0.0, profile.coherent.run_jitter);
    plan.run_offset = gauss(rng);
  }

  const unsigned hw = std::thread::hardware_concurrency();
  const std::int64_t max_threads =
      std::clamp<std::int64_t>(hw == 0 ? 1 : hw, 1, 16);
  const std::int64_t n_threads =
      (shots < 256) ? 1 : std::min<std::int64_t>(max_threads, shots);

  Histogram h;
  h.shots = shots;
  if (n_threads <= 1) {
    run_shot_range(plan, seed, 0, shots, h.counts);
    return h;
  }

  std::vector<std::map<std::string, std::int64_t>> partial(
      static_cast<std::size_t>(n_threads));
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n_threads));
  const std::int64_t chunk = (shots + n_threads - 1) / n_threads;
  for (std::int64_t t = 0; t < n_threads; ++t) {
    const std::int64_t begin = t * chunk;
    const std::int64_t end = std::min(shots, begin + chunk);
    pool.emplace_back([&, t, begin, end] {
      try {
        run_shot_range(plan, seed, begin, end,
                       partial[static_cast<std::size_t>(t)]);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  for (std::thread& th : pool) th.join();
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& part : partial)
    for (const auto& [bits, n] : part) h.counts[bits] += n;
  return h;
}

}  // namespace quarch
