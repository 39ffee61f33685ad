// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "backend.hpp"

namespace quarch {

// Copies the backend with the depolarizing strength replaced: p2 is set
// directly and p1 co-varies at the backend's configured p1/p2 ratio
// (0.1 when p2 is zero). This is exactly how calibration probes apply
// candidate values, so callers applying a calibrated p2 should use it too.
Backend apply_depolarizing(const Backend& backend, double p2);

// Copies the backend with the quasi-static sigma replaced.
Backend apply_coherent_sigma(const Backend& backend, double sigma);

// Bisection on p2 in (0, 0.2] until a first-4-point linear fit of the
// swap-chain sweep (>= 8192 shots per point) reproduces |target_slope|
// within 5% relative. p1 co-varies with p2 at the backend's configured
// ratio; the coherent channel stays as configured. Throws NoConvergence
// when the bracket holds no root.
double calibrate_depolarizing(const Backend& backend, double target_slope,
                              std::int64_t shots = 8192,
                              std::uint64_t seed = 1);

// Bisection on sigma in [1e-4, 0.5] until fit_gaussian of the dressed-CNOT
// chain sweep (depths 2..60, 4096 shots) recovers d0 within 10% of
// target_d0. The backend's depolarizing and SPAM channels stay as
// configured. Throws NoConvergence when the bracket holds no root.
double calibrate_coherent_sigma(const Backend& backend, double target_d0,
                                std::int64_t shots = 4096,
                                std::uint64_t seed = 1);

}  // namespace quarch
