// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "unitary.hpp"

#include <cmath>
#include <cstddef>

namespace quarch {

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      Complex s = 0;
      for (std::size_t k = 0; k < 2; ++k) s += a[i * 2 + k] * b[k * 2 + j];
      out[i * 2 + j] = s;
    }
  return out;
}

Mat4 mul(const Mat4& a, const Mat4& b) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      Complex s = 0;
      for (std::size_t k = 0; k < 4; ++k) s += a[i * 4 + k] * b[k * 4 + j];
      out[i * 4 + j] = s;
    }
  return out;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out[(i * 2 + k) * 4 + (j * 2 + l)] = a[i * 2 + j] * b[k * 2 + l];
  return out;
}

Mat2 dagger(const Mat2& m) {
  Mat2 out{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      out[i * 2 + j] = std::conj(m[j * 2 + i]);
  return out;
}

Mat4 dagger(const Mat4& m) {
  Mat4 out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      out[i * 4 + j] = std::conj(m[j * 4 + i]);
  return out;
}

bool equal_up_to_global_phase(std::span<const Complex> a,
                              std::span<const Complex> b, double tol) {
  if (a.size() != b.size()) return false;
  std::size_t ref = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const double m = std::abs(b[i]);
    if (m > best) {
      best = m;
      ref = i;
    }
  }
  if (best <= tol) {
    // b is (numerically) zero; equality demands a is too.
    for (const Complex& x : a)
      if (std::abs(x) > tol) return false;
    return true;
  }
  const Complex scale = a[ref] / b[ref];
  if (std::abs(std::abs(scale) - 1.0) > tol) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - scale * b[i]) > tol) return false;
  return true;
}

bool equal_up_to_global_phase(const Mat2& a, const Mat2& b, double tol) {
  return equal_up_to_global_phase(std::span<const Complex>(a),
                                  std::span<const Complex>(b), tol);
}

bool equal_up_to_global_phase(const Mat4& a, const Mat4& b, double tol) {
  return equal_up_to_global_phase(std::span<const Complex>(a),
                                  std::span<const Complex>(b), tol);
}

}  // namespace quarch
