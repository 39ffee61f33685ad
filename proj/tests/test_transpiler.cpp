// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "circuit.hpp"
#include "gates.hpp"
#include "oracle_util.hpp"
#include "statevector.hpp"
#include "transpiler.hpp"
#include "unitary.hpp"

using namespace quarch;

namespace {

constexpr double kTol = 1e-9;

// Explicit operator product of a two-qubit instruction list, built through
// the brute-force oracle expansion (independent of the simulator kernels).
Mat4 product_of(const std::vector<Instruction>& gates) {
  oracle::DenseMatrix u = oracle::identity(4);
  for (const Instruction& inst : gates)
    u = oracle::matmul(oracle::expand(inst, 2), u);
  Mat4 out{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) out[r * 4 + c] = u[r][c];
  return out;
}

Mat2 product1_of(const std::vector<Instruction>& gates) {
  Mat2 acc{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{1, 0}};
  for (const Instruction& inst : gates) acc = mul(unitary1(inst), acc);
  return acc;
}

bool only_native(const Circuit& c, NativeSet native) {
  const GateKind entangler = native == NativeSet::XX   ? GateKind::XX
                             : native == NativeSet::ZX ? GateKind::ZX
                                                       : GateKind::CZ;
  for (const Instruction& inst : c.instructions)
    if (inst.kind != GateKind::R && inst.kind != entangler) return false;
  return true;
}

Circuit random_source_circuit(std::mt19937_64& rng, int n, int n_gates) {
  Circuit c(n);
  std::uniform_int_distribution<int> qubit_pick(0, n - 1);
  std::uniform_real_distribution<double> angle(-2.0 * M_PI, 2.0 * M_PI);
  std::bernoulli_distribution coin;
  const std::vector<GateKind> pool = {
      GateKind::H, GateKind::T,    GateKind::X,  GateKind::Y, GateKind::Z,
      GateKind::R, GateKind::CNOT, GateKind::SWAP, GateKind::CZ};
  std::uniform_int_distribution<std::size_t> kind_pick(0, pool.size() - 1);
  for (int q = 0; q < n; ++q)
    c.initial_ones[static_cast<std::size_t>(q)] = coin(rng);
  for (int i = 0; i < n_gates; ++i) {
    const GateKind kind = pool[kind_pick(rng)];
    if (arity(kind) == 1) {
      if (kind == GateKind::R) {
        c.add(make_r(qubit_pick(rng), angle(rng), angle(rng)));
      } else {
        c.add(make_gate1(kind, qubit_pick(rng)));
      }
    } else {
      int a = qubit_pick(rng), b = qubit_pick(rng);
      while (b == a) b = qubit_pick(rng);
      c.add(make_gate2(kind, a, b));
    }
  }
  for (int q = 0; q < n; ++q) c.measured.push_back(q);
  return c;
}

void check_same_distribution(const Circuit& a, const Circuit& b) {
  std::vector<int> all;
  for (int q = 0; q < a.n_qubits; ++q) all.push_back(q);
  const std::vector<double> pa = run_ideal(a).marginal_probs(all);
  const std::vector<double> pb = run_ideal(b).marginal_probs(all);
  REQUIRE(pa.size() == pb.size());
  double tv = 0.0;
  for (std::size_t i = 0; i < pa.size(); ++i)
    tv += 0.5 * std::abs(pa[i] - pb[i]);
  CHECK(tv < kTol);
}

}  // namespace

TEST_CASE("native set names parse and round-trip") {
  CHECK(parse_native_set("xx") == NativeSet::XX);
  CHECK(parse_native_set("zx") == NativeSet::ZX);
  CHECK(parse_native_set("cz") == NativeSet::CZ);
  CHECK_FALSE(parse_native_set("cx").has_value());
  for (NativeSet s : {NativeSet::XX, NativeSet::ZX, NativeSet::CZ})
    CHECK(parse_native_set(native_set_name(s)) == s);
}

TEST_CASE("decompose_h produces H up to global phase") {
  const std::vector<Instruction> seq = decompose_h(0);
  REQUIRE(seq.size() == 2);
  CHECK(seq[0].kind == GateKind::R);
  CHECK(seq[1].kind == GateKind::R);
  CHECK(equal_up_to_global_phase(product1_of(seq), h_matrix(), kTol));
}

TEST_CASE("decompose_cnot matches CNOT for every native family") {
  for (NativeSet native : {NativeSet::XX, NativeSet::ZX, NativeSet::CZ}) {
    CAPTURE(native_set_name(native));
    for (const auto& [c, t] : std::vector<std::pair<int, int>>{{0, 1}, {1, 0}}) {
      const std::vector<Instruction> seq = decompose_cnot(native, c, t);
      int entanglers = 0;
      for (const Instruction& inst : seq)
        if (arity(inst.kind) == 2) ++entanglers;
      CHECK(entanglers == 1);
      const Mat4 want = product_of({make_gate2(GateKind::CNOT, c, t)});
      CHECK(equal_up_to_global_phase(product_of(seq), want, kTol));
    }
  }
}

TEST_CASE("decompose_cnot gate counts per family") {
  CHECK(decompose_cnot(NativeSet::CZ, 0, 1).size() == 5);
  CHECK(decompose_cnot(NativeSet::ZX, 0, 1).size() == 4);
  CHECK(decompose_cnot(NativeSet::XX, 0, 1).size() == 6);
}

TEST_CASE("decompose_swap is three alternating CNOTs") {
  const std::vector<Instruction> seq = decompose_swap(2, 5);
  REQUIRE(seq.size() == 3);
  CHECK(seq[0] == make_gate2(GateKind::CNOT, 2, 5));
  CHECK(seq[1] == make_gate2(GateKind::CNOT, 5, 2));
  CHECK(seq[2] == make_gate2(GateKind::CNOT, 2, 5));
}

TEST_CASE("full SWAP decomposition equals SWAP exactly") {
  for (NativeSet native : {NativeSet::XX, NativeSet::ZX, NativeSet::CZ}) {
    std::vector<Instruction> lowered;
    for (const Instruction& cn : decompose_swap(0, 1)) {
      const std::vector<Instruction> one =
          decompose_cnot(native, cn.q0, cn.q1);
      lowered.insert(lowered.end(), one.begin(), one.end());
    }
    CHECK(equal_up_to_global_phase(product_of(lowered), swap_matrix(), kTol));
  }
}

TEST_CASE("transpile emits only native gates") {
  std::mt19937_64 rng(0x7777ULL);
  for (NativeSet native : {NativeSet::XX, NativeSet::ZX, NativeSet::CZ}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Circuit c = random_source_circuit(rng, 3, 12);
      CHECK(only_native(transpile(c, native), native));
      CHECK(only_native(transpile(c, native, {}), native));
    }
  }
}

TEST_CASE("transpile preserves the measurement distribution") {
  std::mt19937_64 rng(0x1234fedcULL);
  for (NativeSet native : {NativeSet::XX, NativeSet::ZX, NativeSet::CZ}) {
    CAPTURE(native_set_name(native));
    for (int trial = 0; trial < 25; ++trial) {
      CAPTURE(trial);
      const Circuit c = random_source_circuit(rng, 4, 16);
      check_same_distribution(c, transpile(c, native));
      check_same_distribution(c, transpile(c, native, {"decompose"}));
    }
  }
}

TEST_CASE("cross-family entanglers are rejected") {
  Circuit c(2);
  c.add(make_gate2(GateKind::XX, 0, 1, 0.3));
  CHECK_THROWS_AS(transpile(c, NativeSet::ZX), std::invalid_argument);
  Circuit d(2);
  d.add(make_gate2(GateKind::ZX, 0, 1, 0.3));
  CHECK_THROWS_AS(transpile(d, NativeSet::XX), std::invalid_argument);
  // Same-family passes through untouched.
  const Circuit same = transpile(c, NativeSet::XX);
  REQUIRE(same.instructions.size() == 1);
  CHECK(same.instructions[0] == c.instructions[0]);
}

TEST_CASE("merge_rotations merges same-axis neighbours and drops full turns") {
  Circuit c(1);
  c.add(make_r(0, M_PI, 0.0));
  c.add(make_r(0, M_PI, 0.0));
  CHECK(merge_rotations(c).instructions.empty());

  Circuit d(1);
  d.add(make_r(0, 0.4, 1.0));
  d.add(make_r(0, 0.5, 1.0));
  const Circuit md = merge_rotations(d);
  REQUIRE(md.instructions.size() == 1);
  CHECK(md.instructions[0].theta == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(md.instructions[0].phi == doctest::Approx(1.0).epsilon(1e-12));

  // Different axes must not merge.
  Circuit e(1);
  e.add(make_r(0, 0.4, 0.0));
  e.add(make_r(0, 0.4, 1.0));
  CHECK(merge_rotations(e).instructions.size() == 2);

  // A two-qubit gate is a barrier.
  Circuit f(2);
  f.add(make_r(0, 0.4, 0.0));
  f.add(make_gate2(GateKind::CZ, 0, 1));
  f.add(make_r(0, 0.4, 0.0));
  CHECK(merge_rotations(f).instructions.size() == 3);

  // Merging cascades to a fixpoint across an intermediate zero.
  Circuit g(1);
  g.add(make_r(0, 0.7, 2.0));
  g.add(make_r(0, M_PI, 2.0));
  g.add(make_r(0, M_PI, 2.0));
  const Circuit mg = merge_rotations(g);
  REQUIRE(mg.instructions.size() == 1);
  CHECK(mg.instructions[0].theta == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("apply_virtual_phase absorbs pure-Z gates into later azimuths") {
  Circuit c(1);
  c.add(make_gate1(GateKind::T, 0));
  c.add(make_r(0, 1.1, 0.2));
  const Circuit vc = apply_virtual_phase(c);
  REQUIRE(vc.instructions.size() == 1);
  CHECK(vc.instructions[0].kind == GateKind::R);
  CHECK(vc.instructions[0].theta == doctest::Approx(1.1).epsilon(1e-12));
  CHECK(vc.instructions[0].phi ==
        doctest::Approx(0.2 + M_PI / 4.0).epsilon(1e-12));

  // A terminal frame is invisible to a computational-basis measurement.
  Circuit d(1);
  d.add(make_gate1(GateKind::T, 0));
  d.measured.push_back(0);
  CHECK(apply_virtual_phase(d).instructions.empty());
}

TEST_CASE("apply_virtual_phase preserves distributions on random circuits") {
  std::mt19937_64 rng(0x99aaULL);
  for (int trial = 0; trial < 25; ++trial) {
    CAPTURE(trial);
    const Circuit c = random_source_circuit(rng, 3, 14);
    const Circuit lowered = decompose(c, NativeSet::CZ, /*lower_z=*/false);
    check_same_distribution(c, apply_virtual_phase(lowered));
  }
}

TEST_CASE("propagate_constants realizes classical preparations") {
  // X on a fresh |0> is just a |1> preparation.
  Circuit c(1);
  c.add(make_gate1(GateKind::X, 0));
  c.measured.push_back(0);
  const Circuit pc = propagate_constants(c);
  CHECK(pc.instructions.empty());
  CHECK(pc.initial_ones[0]);

  // Once a qubit leaves the basis, later gates are retained.
  Circuit d(1);
  d.add(make_gate1(GateKind::H, 0));
  d.add(make_gate1(GateKind::X, 0));
  CHECK(propagate_constants(d).instructions.size() == 2);

  // A CNOT from a known-0 control disappears; from a known-1 control it
  // becomes a classical flip of the target.
  Circuit e(2);
  e.add(make_gate2(GateKind::CNOT, 0, 1));
  const Circuit pe = propagate_constants(e);
  CHECK(pe.instructions.empty());
  CHECK_FALSE(pe.initial_ones[1]);

  Circuit f(2);
  f.initial_ones[0] = true;
  f.add(make_gate2(GateKind::CNOT, 0, 1));
  const Circuit pf = propagate_constants(f);
  CHECK(pf.instructions.empty());
  CHECK(pf.initial_ones[0]);
  CHECK(pf.initial_ones[1]);
}

TEST_CASE("propagate_constants preserves distributions on random circuits") {
  std::mt19937_64 rng(0xc0deULL);
  for (int trial = 0; trial < 25; ++trial) {
    CAPTURE(trial);
    const Circuit c = random_source_circuit(rng, 3, 14);
    check_same_distribution(c, propagate_constants(c));
  }
}

TEST_CASE("transpile validates its pass list") {
  Circuit c(2);
  c.add(make_gate1(GateKind::H, 0));
  CHECK_THROWS_AS(transpile(c, NativeSet::CZ, {"optimize_everything"}),
                  std::invalid_argument);
  // A list without "decompose" still ends native.
  CHECK(only_native(transpile(c, NativeSet::CZ, {"merge_rotations"}),
                    NativeSet::CZ));
}

TEST_CASE("default pipeline shrinks a purely classical circuit") {
  Circuit c(2);
  c.add(make_gate1(GateKind::X, 0));  // classical |1> preparation
  c.add(make_gate1(GateKind::T, 1));  // pure phase on |0>, unobservable
  c.measured = {0, 1};
  const Circuit out = transpile(c, NativeSet::XX);
  CHECK(out.instructions.empty());
  CHECK(out.initial_ones[0]);
  CHECK_FALSE(out.initial_ones[1]);
  check_same_distribution(c, out);
}

TEST_CASE("default pipeline keeps distributions over every native set") {
  std::mt19937_64 rng(0x31415926ULL);
  for (NativeSet native : {NativeSet::XX, NativeSet::ZX, NativeSet::CZ}) {
    CAPTURE(native_set_name(native));
    for (int trial = 0; trial < 15; ++trial) {
      CAPTURE(trial);
      const Circuit c = random_source_circuit(rng, 4, 18);
      const Circuit out = transpile(c, native);
      CHECK(only_native(out, native));
      check_same_distribution(c, out);
    }
  }
}
