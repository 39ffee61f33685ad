// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bench.hpp"

namespace quarch {

// Self-contained 640x480 SVG scatter of success probability vs parameter,
// one series per (backend, experiment) with Wald 95% error bars, plus an
// optional fitted-curve overlay. Byte-deterministic for identical inputs.
// Marker convention: black circles for ionq-* backends, blue squares for
// ibm-*, red triangles for rigetti-*, gray diamonds otherwise.
// Throws std::invalid_argument on empty input or any record with no shots.
std::string render_svg(const std::vector<ExperimentRecord>& records,
                       const std::optional<FitResult>& fit = std::nullopt);

}  // namespace quarch
