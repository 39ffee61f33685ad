// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "backend.hpp"
#include "circuit.hpp"

namespace quarch {

enum class Experiment { Spam, CnotChain, SwapChain, Bv };

std::string_view experiment_name(Experiment e);
std::optional<Experiment> parse_experiment(std::string_view name);

// One swept data point, serialized as one JSON object per line with the
// fixed key order backend, experiment, parameter, shots, successes, seed,
// ci95.
struct ExperimentRecord {
  std::string backend;
  std::string experiment;
  std::int64_t parameter = 0;  // depth in two-qubit gates, Hamming weight,
                               // or prepared bit for spam
  std::int64_t shots = 0;
  std::int64_t successes = 0;
  std::uint64_t seed = 0;
  double ci95 = 0.0;

  bool operator==(const ExperimentRecord&) const = default;
};

std::string format_record(const ExperimentRecord& r);
std::string format_records(const std::vector<ExperimentRecord>& rs);
std::vector<ExperimentRecord> parse_records(const std::string& text);

enum class FitModel { Gaussian, Linear };

// Gaussian: p0 = d0, p1 = amplitude. Linear: p0 = intercept, p1 = slope.
struct FitResult {
  FitModel model = FitModel::Gaussian;
  double p0 = 0.0;
  double p1 = 0.0;
  double residual = 0.0;  // sum of squared errors
};

std::string format_fit(const FitResult& f);

// --- Experiment circuit builders (logical circuits, standard gates) ---

// One qubit, optionally prepared |1>, no gates, measured.
Circuit build_spam_circuit(bool prep_one);

// H(q0); `blocks` x [X(q0), CNOT(q0,q1), Y(q0), CNOT(q0,q1)]; H(q0);
// measure q0. Depth parameter = 2*blocks two-qubit gates.
Circuit build_cnot_chain(int blocks);

// H both; `repeats` SWAPs; H both; measure both; success target |00>.
Circuit build_swap_chain(int repeats);

// n data qubits + ancilla (index n) prepared |1>; H everywhere;
// CNOT(data_i -> ancilla) where hidden[i] == '1'; H on data; measure data.
Circuit build_bv(int n, const std::string& hidden);

// The weight-w representative: w ones in the lowest-index positions.
std::string hidden_for_weight(int n, int weight);

// Success rate of the best classical single-query strategy: 2^(1-n).
double classical_baseline(int n);

// --- Sweeps ---

struct SweepSpec {
  Experiment experiment = Experiment::SwapChain;
  // Grid semantics: spam -> prepared bit in {0,1}; cnot-chain -> depth in
  // CNOTs (even; blocks = depth/2); swap-chain -> SWAP repeats; bv ->
  // Hamming weight.
  std::vector<std::int64_t> grid;
  int bv_n = 4;
  std::int64_t shots = 1024;
  std::uint64_t seed = 1;
  // Transpiler pass list. Empty = per-experiment default: the chain
  // experiments run decompose only (their dressing gates are the
  // experiment's subject and must not be optimized away); spam and bv run
  // the full default pipeline.
  std::vector<std::string> passes;
  bool passes_overridden = false;
};

std::vector<std::int64_t> default_grid(Experiment e);

// Builds, routes, transpiles, and runs one noisy sweep point per grid
// entry. Point seeds derive from (spec.seed, experiment name, parameter),
// so records are independent of evaluation order.
std::vector<ExperimentRecord> sweep(const SweepSpec& spec,
                                    const Backend& backend);

// Ancilla on the lowest-index maximum-degree vertex, data qubits on its
// BFS-nearest neighbors (ascending index within each ring).
std::vector<int> bv_placement(const Topology& g, int n_data);

// --- Fits ---

// Least squares for P(d) = 0.5 + A*exp(-(d/d0)^2), A in (0, 0.5], d0 > 0;
// points are (depth, success). Throws NoConvergence on all-equal successes
// ("degenerate data") or when the optimum runs away to the grid edge ("no
// decay"). The minimizer is a dense log-spaced d0 grid with golden-section
// refinement.
FitResult fit_gaussian(const std::vector<std::pair<double, double>>& points);

// Ordinary least squares over exactly the first 4 points (sorted by
// depth). Throws std::invalid_argument on fewer than 4 points.
FitResult fit_linear_first4(
    const std::vector<std::pair<double, double>>& points);

// (parameter, successes/shots) pairs sorted by parameter.
std::vector<std::pair<double, double>> points_from_records(
    const std::vector<ExperimentRecord>& rs);

}  // namespace quarch
