// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "gates.hpp"

#include <cmath>
#include <numbers>

namespace quarch {

namespace {
constexpr Complex kI{0.0, 1.0};
}  // namespace

int arity(GateKind k) {
  switch (k) {
    case GateKind::H:
    case GateKind::T:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::R:
      return 1;
    default:
      return 2;
  }
}

int param_count(GateKind k) {
  switch (k) {
    case GateKind::R:
      return 2;
    case GateKind::XX:
    case GateKind::ZX:
      return 1;
    default:
      return 0;
  }
}

std::string_view gate_name(GateKind k) {
  switch (k) {
    case GateKind::H: return "H";
    case GateKind::T: return "T";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::R: return "R";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CZ: return "CZ";
    case GateKind::XX: return "XX";
    case GateKind::ZX: return "ZX";
  }
  return "?";
}

std::optional<GateKind> parse_gate_name(std::string_view name) {
  if (name == "H") return GateKind::H;
  if (name == "T") return GateKind::T;
  if (name == "X") return GateKind::X;
  if (name == "Y") return GateKind::Y;
  if (name == "Z") return GateKind::Z;
  if (name == "R") return GateKind::R;
  if (name == "CNOT") return GateKind::CNOT;
  if (name == "SWAP") return GateKind::SWAP;
  if (name == "CZ") return GateKind::CZ;
  if (name == "XX") return GateKind::XX;
  if (name == "ZX") return GateKind::ZX;
  return std::nullopt;
}

Mat2 r_matrix(double theta, double phi) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  const Complex ep = std::exp(kI * phi);
  const Complex em = std::exp(-kI * phi);
  return Mat2{Complex{c, 0}, -kI * ep * s, -kI * em * s, Complex{c, 0}};
}

Mat2 h_matrix() {
  const double r = 1.0 / std::sqrt(2.0);
  return Mat2{Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}};
}

Mat2 t_matrix() {
  return Mat2{Complex{1, 0}, Complex{0, 0}, Complex{0, 0},
              std::exp(kI * (std::numbers::pi / 4.0))};
}

Mat2 x_matrix() {
  return Mat2{Complex{0, 0}, Complex{1, 0}, Complex{1, 0}, Complex{0, 0}};
}

Mat2 y_matrix() {
  return Mat2{Complex{0, 0}, -kI, kI, Complex{0, 0}};
}

Mat2 z_matrix() {
  return Mat2{Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{-1, 0}};
}

Mat4 xx_matrix(double chi) {
  // exp(-i chi X(x)X) = cos(chi) I - i sin(chi) X(x)X.
  const Complex c{std::cos(chi), 0};
  const Complex s = -kI * std::sin(chi);
  Mat4 m{};
  m[0 * 4 + 0] = c; m[0 * 4 + 3] = s;
  m[1 * 4 + 1] = c; m[1 * 4 + 2] = s;
  m[2 * 4 + 2] = c; m[2 * 4 + 1] = s;
  m[3 * 4 + 3] = c; m[3 * 4 + 0] = s;
  return m;
}

Mat4 zx_matrix(double chi) {
  // exp(-i chi Z(x)X): block-diagonal, exp(-i chi X) on the Z=+1 block and
  // exp(+i chi X) on the Z=-1 block.
  const Complex c{std::cos(chi), 0};
  const Complex s = -kI * std::sin(chi);
  Mat4 m{};
  m[0 * 4 + 0] = c; m[0 * 4 + 1] = s;
  m[1 * 4 + 1] = c; m[1 * 4 + 0] = s;
  m[2 * 4 + 2] = c; m[2 * 4 + 3] = -s;
  m[3 * 4 + 3] = c; m[3 * 4 + 2] = -s;
  return m;
}

Mat4 cz_matrix() {
  Mat4 m{};
  m[0] = m[5] = m[10] = Complex{1, 0};
  m[15] = Complex{-1, 0};
  return m;
}

Mat4 cnot_matrix() {
  Mat4 m{};
  m[0 * 4 + 0] = m[1 * 4 + 1] = Complex{1, 0};
  m[2 * 4 + 3] = m[3 * 4 + 2] = Complex{1, 0};
  return m;
}

Mat4 swap_matrix() {
  Mat4 m{};
  m[0 * 4 + 0] = m[3 * 4 + 3] = Complex{1, 0};
  m[1 * 4 + 2] = m[2 * 4 + 1] = Complex{1, 0};
  return m;
}

Mat4 cz_overrotated(double delta) {
  Mat4 m{};
  m[0] = m[5] = m[10] = Complex{1, 0};
  m[15] = std::exp(kI * (std::numbers::pi + delta));
  return m;
}

}  // namespace quarch
