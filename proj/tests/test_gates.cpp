// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "gates.hpp"
#include "unitary.hpp"

using namespace quarch;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

double max_abs_diff(const Mat2& a, const Mat2& b) {
  double m = 0;
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs_diff(const Mat4& a, const Mat4& b) {
  double m = 0;
  for (int i = 0; i < 16; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool is_unitary(const Mat2& u) {
  Mat2 p = mul(dagger(u), u);
  const Mat2 id{1.0, 0.0, 0.0, 1.0};
  return max_abs_diff(p, id) < 1e-12;
}

bool is_unitary(const Mat4& u) {
  Mat4 p = mul(dagger(u), u);
  Mat4 id{};
  for (int i = 0; i < 4; ++i) id[static_cast<std::size_t>(i * 4 + i)] = 1.0;
  return max_abs_diff(p, id) < 1e-12;
}

}  // namespace

TEST_CASE("gate metadata") {
  CHECK(arity(GateKind::H) == 1);
  CHECK(arity(GateKind::R) == 1);
  CHECK(arity(GateKind::CNOT) == 2);
  CHECK(arity(GateKind::XX) == 2);
  CHECK(param_count(GateKind::R) == 2);
  CHECK(param_count(GateKind::XX) == 1);
  CHECK(param_count(GateKind::ZX) == 1);
  CHECK(param_count(GateKind::H) == 0);
  for (GateKind k :
       {GateKind::H, GateKind::T, GateKind::X, GateKind::Y, GateKind::Z,
        GateKind::R, GateKind::CNOT, GateKind::SWAP, GateKind::CZ,
        GateKind::XX, GateKind::ZX}) {
    const auto parsed = parse_gate_name(gate_name(k));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == k);
  }
  CHECK(!parse_gate_name("FOO").has_value());
}

TEST_CASE("single-qubit r matrix entries") {
  // R(theta, phi) = [[cos(t/2), -i e^{+i phi} sin(t/2)],
  //                  [-i e^{-i phi} sin(t/2), cos(t/2)]]
  const double theta = 1.234, phi = 0.567;
  const Mat2 r = r_matrix(theta, phi);
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  CHECK(std::abs(r[0] - Complex{c, 0}) < 1e-15);
  CHECK(std::abs(r[1] - (-kI * std::exp(kI * phi) * s)) < 1e-15);
  CHECK(std::abs(r[2] - (-kI * std::exp(-kI * phi) * s)) < 1e-15);
  CHECK(std::abs(r[3] - Complex{c, 0}) < 1e-15);

  // R(pi, 0) = -iX; R(pi, pi/2) = +iY.
  CHECK(max_abs_diff(r_matrix(kPi, 0.0),
                     Mat2{0.0, -kI, -kI, 0.0}) < 1e-15);
  CHECK(max_abs_diff(r_matrix(kPi, kPi / 2),
                     Mat2{0.0, 1.0, -1.0, 0.0}) < 1e-12);
  CHECK(equal_up_to_global_phase(r_matrix(kPi, 0.0), x_matrix(), 1e-12));
  CHECK(equal_up_to_global_phase(r_matrix(kPi, kPi / 2), y_matrix(), 1e-12));
}

TEST_CASE("fixed single-qubit gates") {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(max_abs_diff(h_matrix(), Mat2{inv_sqrt2, inv_sqrt2, inv_sqrt2,
                                      -inv_sqrt2}) < 1e-15);
  CHECK(max_abs_diff(t_matrix(),
                     Mat2{1.0, 0.0, 0.0, std::exp(kI * (kPi / 4))}) < 1e-15);
  CHECK(max_abs_diff(x_matrix(), Mat2{0.0, 1.0, 1.0, 0.0}) < 1e-15);
  CHECK(max_abs_diff(y_matrix(), Mat2{0.0, -kI, kI, 0.0}) < 1e-15);
  CHECK(max_abs_diff(z_matrix(), Mat2{1.0, 0.0, 0.0, -1.0}) < 1e-15);
  // T^2 = S (phase pi/2), T^8 = I.
  Mat2 t8 = t_matrix();
  for (int i = 0; i < 7; ++i) t8 = mul(t8, t_matrix());
  CHECK(max_abs_diff(t8, Mat2{1.0, 0.0, 0.0, 1.0}) < 1e-12);
}

TEST_CASE("two-qubit gate matrices") {
  // Basis order |q_first q_second>, first operand most significant.
  Mat4 cnot{};
  cnot[0] = cnot[5] = cnot[11] = cnot[14] = 1.0;  // |10>-><11>, |11>-><10>
  CHECK(max_abs_diff(cnot_matrix(), cnot) < 1e-15);

  Mat4 cz{};
  cz[0] = cz[5] = cz[10] = 1.0;
  cz[15] = -1.0;
  CHECK(max_abs_diff(cz_matrix(), cz) < 1e-15);
  CHECK(max_abs_diff(cz_overrotated(0.0), cz) < 1e-15);
  const Mat4 czo = cz_overrotated(0.3);
  CHECK(std::abs(czo[15] - std::exp(kI * (kPi + 0.3))) < 1e-15);

  Mat4 swap{};
  swap[0] = swap[6] = swap[9] = swap[15] = 1.0;
  CHECK(max_abs_diff(swap_matrix(), swap) < 1e-15);

  // XX(chi) = cos(chi) I - i sin(chi) X(x)X.
  const double chi = 0.789;
  Mat4 xx_expected{};
  for (int i = 0; i < 4; ++i)
    xx_expected[static_cast<std::size_t>(i * 4 + i)] = std::cos(chi);
  xx_expected[3] = xx_expected[6] = xx_expected[9] = xx_expected[12] =
      -kI * std::sin(chi);
  CHECK(max_abs_diff(xx_matrix(chi), xx_expected) < 1e-15);

  // ZX(chi): control-|0> block exp(-i chi X), control-|1> block exp(+i chi X).
  Mat4 zx_expected{};
  zx_expected[0] = zx_expected[5] = std::cos(chi);
  zx_expected[1] = zx_expected[4] = -kI * std::sin(chi);
  zx_expected[10] = zx_expected[15] = std::cos(chi);
  zx_expected[11] = zx_expected[14] = kI * std::sin(chi);
  CHECK(max_abs_diff(zx_matrix(chi), zx_expected) < 1e-15);
}

TEST_CASE("entangling-angle additivity") {
  for (double a : {0.2, -0.7, 1.4}) {
    for (double b : {0.45, 1.1}) {
      CHECK(max_abs_diff(mul(xx_matrix(a), xx_matrix(b)),
                         xx_matrix(a + b)) < 1e-12);
      CHECK(max_abs_diff(mul(zx_matrix(a), zx_matrix(b)),
                         zx_matrix(a + b)) < 1e-12);
    }
  }
}

TEST_CASE("all gate matrices are unitary") {
  CHECK(is_unitary(h_matrix()));
  CHECK(is_unitary(t_matrix()));
  CHECK(is_unitary(x_matrix()));
  CHECK(is_unitary(y_matrix()));
  CHECK(is_unitary(z_matrix()));
  for (double theta : {0.0, 0.3, kPi, 2.5})
    for (double phi : {0.0, -1.2, kPi / 4})
      CHECK(is_unitary(r_matrix(theta, phi)));
  CHECK(is_unitary(cnot_matrix()));
  CHECK(is_unitary(swap_matrix()));
  CHECK(is_unitary(cz_matrix()));
  for (double chi : {0.1, kPi / 4, -0.9}) {
    CHECK(is_unitary(xx_matrix(chi)));
    CHECK(is_unitary(zx_matrix(chi)));
    CHECK(is_unitary(cz_overrotated(chi)));
  }
}

TEST_CASE("equal_up_to_global_phase semantics") {
  const Mat2 h = h_matrix();
  Mat2 h_phased;
  const Complex phase = std::exp(kI * 0.77);
  for (int i = 0; i < 4; ++i) h_phased[static_cast<std::size_t>(i)] =
      phase * h[static_cast<std::size_t>(i)];
  CHECK(equal_up_to_global_phase(h, h_phased, 1e-12));
  CHECK(!equal_up_to_global_phase(h, x_matrix(), 1e-9));
  // A relative (non-global) phase must not pass.
  Mat2 bad = h;
  bad[1] *= std::exp(kI * 0.1);
  CHECK(!equal_up_to_global_phase(h, bad, 1e-9));
}

TEST_CASE("kron ordering: first factor is the most significant qubit") {
  // (Z (x) I) |10> = -|10>: entry (2,2) = -1.
  const Mat4 zi = kron(z_matrix(), Mat2{1.0, 0.0, 0.0, 1.0});
  CHECK(std::abs(zi[10] - Complex{-1.0, 0.0}) < 1e-15);
  CHECK(std::abs(zi[0] - Complex{1.0, 0.0}) < 1e-15);
  const Mat4 iz = kron(Mat2{1.0, 0.0, 0.0, 1.0}, z_matrix());
  CHECK(std::abs(iz[5] - Complex{-1.0, 0.0}) < 1e-15);  // |01> -> -|01>
}
