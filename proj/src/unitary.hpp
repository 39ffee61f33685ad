// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>

namespace quarch {

using Complex = std::complex<double>;

// Dense row-major square matrices of the two sizes gates come in.
using Mat2 = std::array<Complex, 4>;    // 2x2
using Mat4 = std::array<Complex, 16>;   // 4x4

Mat2 mul(const Mat2& a, const Mat2& b);
Mat4 mul(const Mat4& a, const Mat4& b);

// Kronecker product: a acts on the most significant qubit.
Mat4 kron(const Mat2& a, const Mat2& b);

Mat2 dagger(const Mat2& m);
Mat4 dagger(const Mat4& m);

// True iff a == c*b for a unit scalar c, elementwise within tol.
// The scalar is fixed from the largest-magnitude entry of b, so the
// comparison is well-conditioned for unitaries.
bool equal_up_to_global_phase(std::span<const Complex> a,
                              std::span<const Complex> b, double tol);

bool equal_up_to_global_phase(const Mat2& a, const Mat2& b, double tol);
bool equal_up_to_global_phase(const Mat4& a, const Mat4& b, double tol);

}  // namespace quarch
