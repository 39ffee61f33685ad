// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "unitary.hpp"

namespace quarch {

// Standard set: H, T, X, Y, Z, CNOT, SWAP.
// Native set:   R(theta,phi), XX(chi), ZX(chi), CZ.
enum class GateKind { H, T, X, Y, Z, R, CNOT, SWAP, CZ, XX, ZX };

int arity(GateKind k);                 // 1 or 2
int param_count(GateKind k);           // 0, 1 (chi) or 2 (theta, phi)
std::string_view gate_name(GateKind k);
std::optional<GateKind> parse_gate_name(std::string_view name);

// --- Single-qubit matrices -------------------------------------------------
// R(theta, phi) rotates by theta about the equatorial axis at azimuth phi:
//   [[cos(t/2),            -i e^{+i phi} sin(t/2)],
//    [-i e^{-i phi} sin(t/2),            cos(t/2)]]
// X = R(pi, 0) and Y = R(pi, pi/2) up to global phase.
Mat2 r_matrix(double theta, double phi);
Mat2 h_matrix();
Mat2 t_matrix();
Mat2 x_matrix();
Mat2 y_matrix();
Mat2 z_matrix();

// --- Two-qubit matrices ----------------------------------------------------
// Basis order |q_first q_second> with the first operand most significant.
// XX(chi) = exp(-i chi X(x)X), ZX(chi) = exp(-i chi Z(x)X) with Z on the
// first operand. CZ = diag(1,1,1,-1); CNOT has the first operand as control.
Mat4 xx_matrix(double chi);
Mat4 zx_matrix(double chi);
Mat4 cz_matrix();
Mat4 cnot_matrix();
Mat4 swap_matrix();

// CZ with its controlled phase over-rotated by delta: diag(1,1,1,e^{i(pi+delta)}).
Mat4 cz_overrotated(double delta);

}  // namespace quarch
