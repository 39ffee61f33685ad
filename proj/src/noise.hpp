// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "circuit.hpp"
#include "rng.hpp"
#include "statevector.hpp"
#include "topology.hpp"

namespace quarch {

// Readout misassignment, state-dependent and per-qubit-uniform.
struct SpamModel {
  double p_read_0 = 0.0;  // true 0 reads as 1
  double p_read_1 = 0.0;  // true 1 reads as 0
};

// Stochastic Pauli insertion after every gate.
struct DepolarizingModel {
  double p2 = 0.0;  // per two-qubit gate
  double p1 = 0.0;  // per single-qubit gate (config default: p2/10)
};

// Per-shot-static over-rotation of every native entangling angle:
// delta ~ bias + Normal(0, sigma), drawn once per shot, plus an optional
// per-run offset ~ Normal(0, run_jitter) drawn once per histogram.
struct QuasiStaticCoherentModel {
  double sigma = 0.0;
  double bias = 0.0;        // fixed miscalibration component
  double run_jitter = 0.0;  // run-to-run drift (default off)
};

// Uniform Pauli flip on topology-adjacent spectators of two-qubit gates.
struct CrosstalkModel {
  double p_ct = 0.0;
};

struct NoiseProfile {
  SpamModel spam;
  DepolarizingModel depol;
  QuasiStaticCoherentModel coherent;
  CrosstalkModel crosstalk;
};

// Flips each bit ('0'/'1') with its state-dependent probability.
std::string apply_readout_error(const std::string& bits, const SpamModel& spam,
                                std::mt19937_64& rng);

// Monte Carlo over independent shot trajectories. Deterministic in
// (circuit, profile, shots, seed) regardless of thread count.
//
// Coherent over-rotation attaches to native entanglers (CZ, XX, ZX) with a
// sign given by the first operand's pulse-parity: a drive miscalibration is
// fixed in the lab frame, and every pi pulse on the wire inverts how the
// re-applied drive error appears in the logical frame. Echo-style dressed
// sequences therefore accumulate the error coherently instead of
// refocusing it, while plain gate repetition keeps a constant sign.
//
// Crosstalk needs device geometry: `topo` plus `device_of_compact` (from
// route()) identify each compact wire's device qubit; spectators are the
// active device neighbors of the gate's operands. With p_ct = 0 both may
// be null.
Histogram run_noisy(const Circuit& c, const NoiseProfile& profile,
                    std::int64_t shots, std::uint64_t seed,
                    const Topology* topo = nullptr,
                    const std::vector<int>* device_of_compact = nullptr);

}  // namespace quarch
