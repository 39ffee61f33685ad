// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "circuit.hpp"

namespace quarch {

// The three hardware gate families: R plus one entangler each.
enum class NativeSet { XX, ZX, CZ };

std::optional<NativeSet> parse_native_set(std::string_view name);
std::string_view native_set_name(NativeSet native);

// H as two R instructions, in time order: R(pi,0) then R(pi/2,pi/2).
// (As an operator product that is H = R(pi/2,pi/2) * R(pi,0) up to a
// global phase of -i.)
std::vector<Instruction> decompose_h(int q);

// CNOT(control=c, target=t) as R instructions around exactly one entangler
// (XX(pi/4), ZX(pi/4), or CZ), equal to CNOT up to global phase.
std::vector<Instruction> decompose_cnot(NativeSet native, int c, int t);

// SWAP(a,b) -> [CNOT(a,b), CNOT(b,a), CNOT(a,b)], exactly (phase 1).
std::vector<Instruction> decompose_swap(int a, int b);

// Lowers standard gates to the native family. Pure-Z gates (T, Z) pass
// through for apply_virtual_phase unless lower_z is set, in which case they
// are synthesized as R(pi,.) pairs.
Circuit decompose(const Circuit& c, NativeSet native, bool lower_z);

// Merges adjacent same-axis R pairs, drops full rotations; runs to fixpoint.
Circuit merge_rotations(const Circuit& c);

// Virtual-Z: absorbs pure-Z gates into a per-qubit phase frame, adjusting
// later R azimuths; flushes the frame (as an R(pi,.) pair) where it cannot
// commute through; drops terminal frames (invisible to Z measurement).
Circuit apply_virtual_phase(const Circuit& c);

// Classical constant propagation over basis-state-known qubits.
Circuit propagate_constants(const Circuit& c);

inline const std::vector<std::string> kDefaultPasses = {
    "propagate_constants", "decompose", "merge_rotations",
    "apply_virtual_phase"};

// Runs the named passes in order. An empty list means decompose only; a
// list lacking "decompose" gets it appended (output must be native).
Circuit transpile(const Circuit& c, NativeSet native,
                  const std::vector<std::string>& passes = kDefaultPasses);

}  // namespace quarch
