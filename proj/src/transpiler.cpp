// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "transpiler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace quarch {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleTol = 1e-12;

// Signed distance of a-b from the nearest multiple of 2*pi.
double angle_diff(double a, double b) {
  return std::remainder(a - b, 2.0 * kPi);
}

bool is_zero_mod_2pi(double a) { return std::abs(angle_diff(a, 0.0)) < kAngleTol; }
bool is_pi_mod_2pi(double a) { return std::abs(angle_diff(a, kPi)) < kAngleTol; }

// D(alpha) = diag(e^{-i alpha/2}, e^{i alpha/2}) as two R(pi,.) pulses,
// in time order (their product is -D(alpha)).
void emit_z_rotation(std::vector<Instruction>& out, int q, double alpha) {
  out.push_back(make_r(q, kPi, alpha / 2.0));
  out.push_back(make_r(q, kPi, 0.0));
}

}  // namespace

std::optional<NativeSet> parse_native_set(std::string_view name) {
  if (name == "xx") return NativeSet::XX;
  if (name == "zx") return NativeSet::ZX;
  if (name == "cz") return NativeSet::CZ;
  return std::nullopt;
}

std::string_view native_set_name(NativeSet native) {
  switch (native) {
    case NativeSet::XX: return "xx";
    case NativeSet::ZX: return "zx";
    case NativeSet::CZ: return "cz";
  }
  return "?";
}

std::vector<Instruction> decompose_h(int q) {
  return {make_r(q, kPi, 0.0), make_r(q, kPi / 2.0, kPi / 2.0)};
}

std::vector<Instruction> decompose_cnot(NativeSet native, int c, int t) {
  std::vector<Instruction> out;
  switch (native) {
    case NativeSet::CZ: {
      // CNOT = (I (x) H) CZ (I (x) H).
      for (const Instruction& i : decompose_h(t)) out.push_back(i);
      out.push_back(make_gate2(GateKind::CZ, c, t));
      for (const Instruction& i : decompose_h(t)) out.push_back(i);
      break;
    }
    case NativeSet::ZX: {
      // CNOT = e^{i pi/4} ZX(pi/4) (S_c (x) Rx(-pi/2)_t); the single-qubit
      // corrections commute with the entangler, so they can precede it.
      // S is synthesized as R(pi,pi/4) R(pi,0) (time order).
      out.push_back(make_r(c, kPi, 0.0));
      out.push_back(make_r(c, kPi, kPi / 4.0));
      out.push_back(make_r(t, kPi / 2.0, kPi));
      out.push_back(make_gate2(GateKind::ZX, c, t, kPi / 4.0));
      break;
    }
    case NativeSet::XX: {
      // ZX(pi/4) = Ry(-pi/2)_c XX(pi/4) Ry(pi/2)_c with Ry(a) = R(a,-pi/2),
      // substituted into the ZX form above.
      out.push_back(make_r(c, kPi, 0.0));
      out.push_back(make_r(c, kPi, kPi / 4.0));
      out.push_back(make_r(t, kPi / 2.0, kPi));
      out.push_back(make_r(c, kPi / 2.0, -kPi / 2.0));
      out.push_back(make_gate2(GateKind::XX, c, t, kPi / 4.0));
      out.push_back(make_r(c, -kPi / 2.0, -kPi / 2.0));
      break;
    }
  }
  return out;
}

std::vector<Instruction> decompose_swap(int a, int b) {
  return {make_gate2(GateKind::CNOT, a, b), make_gate2(GateKind::CNOT, b, a),
          make_gate2(GateKind::CNOT, a, b)};
}

Circuit decompose(const Circuit& c, NativeSet native, bool lower_z) {
  Circuit out(c.n_qubits);
  out.measured = c.measured;
  out.initial_ones = c.initial_ones;

  const auto emit_cnot = [&](int ctl, int tgt) {
    for (const Instruction& i : decompose_cnot(native, ctl, tgt)) out.add(i);
  };

  for (const Instruction& inst : c.instructions) {
    switch (inst.kind) {
      case GateKind::H:
        for (const Instruction& i : decompose_h(inst.q0)) out.add(i);
        break;
      case GateKind::X:
        out.add(make_r(inst.q0, kPi, 0.0));
        break;
      case GateKind::Y:
        out.add(make_r(inst.q0, kPi, kPi / 2.0));
        break;
      case GateKind::T:
        if (lower_z)
          emit_z_rotation(out.instructions, inst.q0, kPi / 4.0);
        else
          out.add(inst);
        break;
      case GateKind::Z:
        if (lower_z)
          emit_z_rotation(out.instructions, inst.q0, kPi);
        else
          out.add(inst);
        break;
      case GateKind::R:
        out.add(inst);
        break;
      case GateKind::CNOT:
        emit_cnot(inst.q0, inst.q1);
        break;
      case GateKind::SWAP:
        for (const Instruction& cn : decompose_swap(inst.q0, inst.q1))
          emit_cnot(cn.q0, cn.q1);
        break;
      case GateKind::CZ:
        if (native == NativeSet::CZ) {
          out.add(inst);
        } else {
          // CZ = (I (x) H) CNOT (I (x) H).
          for (const Instruction& i : decompose_h(inst.q1)) out.add(i);
          emit_cnot(inst.q0, inst.q1);
          for (const Instruction& i : decompose_h(inst.q1)) out.add(i);
        }
        break;
      case GateKind::XX:
        if (native != NativeSet::XX)
          throw std::invalid_argument(
              "cross-family entangler: XX gate under native set '" +
              std::string(native_set_name(native)) + "'");
        out.add(inst);
        break;
      case GateKind::ZX:
        if (native != NativeSet::ZX)
          throw std::invalid_argument(
              "cross-family entangler: ZX gate under native set '" +
              std::string(native_set_name(native)) + "'");
        out.add(inst);
        break;
    }
  }
  return out;
}

Circuit merge_rotations(const Circuit& c) {
  std::vector<Instruction> work = c.instructions;
  bool changed = true;
  while (changed) {
    changed = false;

    // Normalize theta into [0, 2*pi) and drop identity rotations.
    std::vector<Instruction> next;
    next.reserve(work.size());
    for (Instruction inst : work) {
      if (inst.kind == GateKind::R) {
        double theta = std::fmod(inst.theta, 2.0 * kPi);
        if (theta < 0) theta += 2.0 * kPi;
        if (theta != inst.theta) {
          inst.theta = theta;
          changed = true;
        }
        if (is_zero_mod_2pi(theta)) {
          changed = true;
          continue;  // identity up to global phase
        }
      }
      next.push_back(inst);
    }
    work = std::move(next);

    // Merge adjacent same-qubit, same-azimuth R pairs.
    std::vector<int> last_r(static_cast<std::size_t>(c.n_qubits), -1);
    std::vector<bool> dead(work.size(), false);
    for (std::size_t i = 0; i < work.size(); ++i) {
      Instruction& inst = work[i];
      if (inst.kind == GateKind::R) {
        const std::size_t q = static_cast<std::size_t>(inst.q0);
        const int prev = last_r[q];
        if (prev >= 0 &&
            std::abs(angle_diff(work[static_cast<std::size_t>(prev)].phi,
                                inst.phi)) < kAngleTol) {
          work[static_cast<std::size_t>(prev)].theta += inst.theta;
          dead[i] = true;
          changed = true;
        } else {
          last_r[q] = static_cast<int>(i);
        }
      } else {
        last_r[static_cast<std::size_t>(inst.q0)] = -1;
        if (arity(inst.kind) == 2)
          last_r[static_cast<std::size_t>(inst.q1)] = -1;
      }
    }
    std::vector<Instruction> kept;
    kept.reserve(work.size());
    for (std::size_t i = 0; i < work.size(); ++i)
      if (!dead[i]) kept.push_back(work[i]);
    work = std::move(kept);
  }

  Circuit out(c.n_qubits);
  out.measured = c.measured;
  out.initial_ones = c.initial_ones;
  out.instructions = std::move(work);
  return out;
}

Circuit apply_virtual_phase(const Circuit& c) {
  Circuit out(c.n_qubits);
  out.measured = c.measured;
  out.initial_ones = c.initial_ones;
  std::vector<double> frame(static_cast<std::size_t>(c.n_qubits), 0.0);

  const auto flush = [&](int q) {
    double& f = frame[static_cast<std::size_t>(q)];
    if (!is_zero_mod_2pi(f)) emit_z_rotation(out.instructions, q, f);
    f = 0.0;
  };

  for (const Instruction& inst : c.instructions) {
    const std::size_t q0 = static_cast<std::size_t>(inst.q0);
    switch (inst.kind) {
      case GateKind::T:
        frame[q0] += kPi / 4.0;
        break;
      case GateKind::Z:
        frame[q0] += kPi;
        break;
      case GateKind::R:
        out.add(make_r(inst.q0, inst.theta, inst.phi + frame[q0]));
        break;
      case GateKind::X:
        out.add(make_r(inst.q0, kPi, frame[q0]));
        break;
      case GateKind::Y:
        out.add(make_r(inst.q0, kPi, kPi / 2.0 + frame[q0]));
        break;
      case GateKind::H:
        flush(inst.q0);
        out.add(inst);
        break;
      case GateKind::CZ:
        out.add(inst);  // diagonal on both wires: frames commute through
        break;
      case GateKind::ZX:
        flush(inst.q1);  // Z side (first operand) commutes, X side does not
        out.add(inst);
        break;
      case GateKind::XX:
        flush(inst.q0);
        flush(inst.q1);
        out.add(inst);
        break;
      case GateKind::CNOT:
        flush(inst.q1);  // control side is diagonal, target side is not
        out.add(inst);
        break;
      case GateKind::SWAP:
        std::swap(frame[q0], frame[static_cast<std::size_t>(inst.q1)]);
        out.add(inst);
        break;
    }
  }
  // Leftover frames are pure-Z phases ahead of a terminal computational-basis
  // measurement: unobservable, dropped.
  return out;
}

Circuit propagate_constants(const Circuit& c) {
  Circuit out(c.n_qubits);
  out.measured = c.measured;
  out.initial_ones = c.initial_ones;
  std::vector<bool> tracked(static_cast<std::size_t>(c.n_qubits), true);
  std::vector<bool> bit(c.initial_ones);

  const auto close_out = [&](int q) {
    const std::size_t i = static_cast<std::size_t>(q);
    if (!tracked[i]) return;
    out.initial_ones[i] = bit[i];
    tracked[i] = false;
  };

  for (const Instruction& inst : c.instructions) {
    const std::size_t a = static_cast<std::size_t>(inst.q0);
    switch (inst.kind) {
      case GateKind::X:
      case GateKind::Y:
        if (tracked[a])
          bit[a] = !bit[a];  // basis flip; phase is global on the branch
        else
          out.add(inst);
        break;
      case GateKind::T:
      case GateKind::Z:
        if (!tracked[a]) out.add(inst);  // diagonal phase on a basis state
        break;
      case GateKind::R:
        if (tracked[a]) {
          if (is_zero_mod_2pi(inst.theta)) break;
          if (is_pi_mod_2pi(inst.theta)) {
            bit[a] = !bit[a];
            break;
          }
          close_out(inst.q0);
          out.add(inst);
        } else {
          out.add(inst);
        }
        break;
      case GateKind::H:
        close_out(inst.q0);
        out.add(inst);
        break;
      case GateKind::CNOT: {
        const std::size_t t = static_cast<std::size_t>(inst.q1);
        if (tracked[a] && !bit[a]) break;          // |0>-control: identity
        if (tracked[a] && bit[a]) {
          if (tracked[t])
            bit[t] = !bit[t];                      // both classical
          else
            out.add(make_gate1(GateKind::X, inst.q1));
          break;
        }
        close_out(inst.q1);  // unknown control entangles the target
        out.add(inst);
        break;
      }
      case GateKind::SWAP: {
        const std::size_t b = static_cast<std::size_t>(inst.q1);
        if (tracked[a] && tracked[b]) {
          std::swap(bit[a], bit[b]);
        } else {
          close_out(inst.q0);
          close_out(inst.q1);
          out.add(inst);
        }
        break;
      }
      case GateKind::CZ: {
        const std::size_t b = static_cast<std::size_t>(inst.q1);
        if (tracked[a] && tracked[b]) break;       // phase on a basis state
        if (tracked[a]) {
          if (bit[a]) out.add(make_gate1(GateKind::Z, inst.q1));
          break;
        }
        if (tracked[b]) {
          if (bit[b]) out.add(make_gate1(GateKind::Z, inst.q0));
          break;
        }
        out.add(inst);
        break;
      }
      case GateKind::XX:
      case GateKind::ZX:
        close_out(inst.q0);
        close_out(inst.q1);
        out.add(inst);
        break;
    }
  }
  for (int q = 0; q < c.n_qubits; ++q) close_out(q);
  return out;
}

Circuit transpile(const Circuit& c, NativeSet native,
                  const std::vector<std::string>& passes) {
  require_valid(c);
  std::vector<std::string> plan = passes;
  if (plan.empty()) plan.push_back("decompose");
  if (std::find(plan.begin(), plan.end(), "decompose") == plan.end())
    plan.push_back("decompose");
  const bool lower_z =
      std::find(plan.begin(), plan.end(), "apply_virtual_phase") == plan.end();

  Circuit cur = c;
  for (const std::string& name : plan) {
    if (name == "propagate_constants")
      cur = propagate_constants(cur);
    else if (name == "decompose")
      cur = decompose(cur, native, lower_z);
    else if (name == "merge_rotations")
      cur = merge_rotations(cur);
    else if (name == "apply_virtual_phase")
      cur = apply_virtual_phase(cur);
    else
      throw std::invalid_argument("unknown transpiler pass '" + name + "'");
  }
  return cur;
}

}  // namespace quarch
