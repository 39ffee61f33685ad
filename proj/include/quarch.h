/* Copyright 2026 The Quarch Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * quarch: multi-backend quantum-circuit transpiler, SWAP router, and noisy
 * state-vector simulator, exposed as a C API with opaque handles.
 *
 * Conventions:
 *  - Every fallible function returns quarch_status; on failure, a
 *    thread-local message is available from quarch_last_error().
 *  - Out-parameters are written only on QUARCH_OK.
 *  - char** out-parameters receive newly allocated NUL-terminated strings;
 *    release them with quarch_string_free(). Handles are released with
 *    their matching *_free().
 *  - `data_dir` arguments may be NULL or empty: the QUARCH_DATA_DIR
 *    environment variable, then "./data", is used instead.
 */
#ifndef QUARCH_H_
#define QUARCH_H_

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum quarch_status {
  QUARCH_OK = 0,
  QUARCH_ERR_INVALID_ARGUMENT = 1,
  QUARCH_ERR_PARSE = 2,
  QUARCH_ERR_NO_CONVERGENCE = 3,
  QUARCH_ERR_INTERNAL = 4
} quarch_status;

/* Library semantic version, e.g. "0.1.0". Static storage; do not free. */
const char* quarch_version(void);

/* Message describing this thread's most recent failure. Static storage,
 * overwritten by the next failing call on the same thread; do not free. */
const char* quarch_last_error(void);

/* Releases strings returned through char** out-parameters. NULL is a
 * no-op. */
void quarch_string_free(char* s);

/* ---------- Circuits ---------- */

typedef struct quarch_circuit quarch_circuit;

/* Parses the line-oriented circuit text format. */
quarch_status quarch_circuit_parse(const char* text, quarch_circuit** out);

/* Formats a circuit; parse(format(c)) is bit-exact. */
quarch_status quarch_circuit_format(const quarch_circuit* c, char** out);

/* Joins all invariant violations with newlines; empty string = valid. */
quarch_status quarch_circuit_validate(const quarch_circuit* c, char** out);

void quarch_circuit_free(quarch_circuit* c);

int quarch_circuit_n_qubits(const quarch_circuit* c);
int quarch_circuit_two_qubit_gate_count(const quarch_circuit* c);

/* Experiment circuit builders. */
quarch_status quarch_build_spam(int prep_one, quarch_circuit** out);
quarch_status quarch_build_cnot_chain(int blocks, quarch_circuit** out);
quarch_status quarch_build_swap_chain(int repeats, quarch_circuit** out);
quarch_status quarch_build_bv(int n, const char* hidden,
                              quarch_circuit** out);

/* Transpiles to a native set ("xx", "zx", or "cz"). passes_csv: NULL for
 * the default pipeline (propagate_constants, decompose, merge_rotations,
 * apply_virtual_phase); "" for decompose only; otherwise a comma-separated
 * pass list. */
quarch_status quarch_transpile(const quarch_circuit* c,
                               const char* native_set,
                               const char* passes_csv,
                               quarch_circuit** out);

/* ---------- Topologies and routing ---------- */

typedef struct quarch_topology quarch_topology;

quarch_status quarch_topology_parse(const char* text, quarch_topology** out);
quarch_status quarch_topology_load(const char* data_dir, const char* name,
                                   quarch_topology** out);
quarch_status quarch_topology_format(const quarch_topology* g, char** out);
void quarch_topology_free(quarch_topology* g);

int quarch_topology_n_qubits(const quarch_topology* g);
int quarch_topology_max_degree(const quarch_topology* g);

/* *out receives 1 or 0. */
quarch_status quarch_topology_is_adjacent(const quarch_topology* g, int a,
                                          int b, int* out);

/* Writes the lexicographically-smallest shortest path into buf (device
 * qubit ids); *out_len receives the vertex count. Fails with
 * QUARCH_ERR_INVALID_ARGUMENT if buf_len is too small. */
quarch_status quarch_shortest_path(const quarch_topology* g, int a, int b,
                                   int* buf, int buf_len, int* out_len);

/* Routes c onto g with greedy shortest-path SWAP insertion. placement may
 * be NULL (identity) or an array of placement_len = n_qubits device ids.
 * The routed circuit is re-indexed over the active device qubits in
 * ascending order; device_map_buf (if non-NULL, length >= the active
 * count) receives that compact-index -> device-id map. *out_swaps and
 * *out_n_active may be NULL if not wanted. */
quarch_status quarch_route(const quarch_circuit* c, const quarch_topology* g,
                           const int* placement, int placement_len,
                           quarch_circuit** out_circuit, int* out_swaps,
                           int* device_map_buf, int device_map_len,
                           int* out_n_active);

/* ---------- Simulation ---------- */

/* Noiseless marginal probabilities of the measured qubits, indexed by the
 * integer whose bits follow the measurement order (first listed qubit is
 * the most significant). *out_len receives 2^(measured count). */
quarch_status quarch_run_ideal_probs(const quarch_circuit* c, double* buf,
                                     int64_t buf_len, int64_t* out_len);

/* Noiseless multinomial sampling; histogram as JSON
 * {"shots":N,"counts":{"bits":n,...}} with counts in bitstring order. */
quarch_status quarch_sample_ideal_json(const quarch_circuit* c,
                                       int64_t shots, uint64_t seed,
                                       char** out_histogram_json);

/* ---------- Backends and noisy execution ---------- */

typedef struct quarch_backend quarch_backend;

/* Loads <data_dir>/backends/<name>.cfg (exact stem or unique prefix) and
 * its topology. */
quarch_status quarch_backend_load(const char* data_dir, const char* name,
                                  quarch_backend** out);
void quarch_backend_free(quarch_backend* b);

/* Backend's configured name. Owned by the handle; do not free. */
const char* quarch_backend_name(const quarch_backend* b);

/* Serialized backend config (the .cfg format). */
quarch_status quarch_backend_config_format(const quarch_backend* b,
                                           char** out);

/* Newline-separated backend stems under <data_dir>/backends. */
quarch_status quarch_list_backends(const char* data_dir, char** out);

/* Monte Carlo noisy execution of a (typically routed + transpiled)
 * circuit under the backend's noise profile. device_map (compact-index ->
 * device-id, from quarch_route) enables crosstalk geometry; pass NULL
 * with map_len 0 when the profile's p_ct is zero. */
quarch_status quarch_run_noisy_json(const quarch_circuit* c,
                                    const quarch_backend* b, int64_t shots,
                                    uint64_t seed, const int* device_map,
                                    int map_len, char** out_histogram_json);

/* ---------- Command-level operations (the CLI's data plane) ---------- */

/* Builds, routes, transpiles, and runs one experiment sweep; returns
 * records as JSON Lines. experiment: "spam", "cnot-chain", "swap-chain",
 * or "bv". grid: per-experiment parameter values (NULL/0 = default grid).
 * passes_csv: as in quarch_transpile, NULL = per-experiment default. */
quarch_status quarch_sweep_run(const char* data_dir, const char* experiment,
                               const char* backend, const int64_t* grid,
                               int grid_len, int bv_n, int64_t shots,
                               uint64_t seed, const char* passes_csv,
                               char** out_records_jsonl);

/* Fits records (JSON Lines) with model "gaussian" or "linear"; returns a
 * one-line JSON fit result. */
quarch_status quarch_fit_records(const char* records_jsonl,
                                 const char* model, char** out_fit_json);

/* Renders records as a self-contained SVG; fit_model may be NULL (no
 * overlay), "gaussian", or "linear". */
quarch_status quarch_plot_records(const char* records_jsonl,
                                  const char* fit_model, char** out_svg);

/* Bisects p2 until the first-4-point swap-chain slope matches
 * |target_slope| within 5% relative. */
quarch_status quarch_calibrate_depolarizing(const char* data_dir,
                                            const char* backend,
                                            double target_slope,
                                            int64_t shots, uint64_t seed,
                                            double* out_p2);

/* Bisects sigma until the fitted dressed-CNOT-chain d0 matches target_d0
 * within 10%. */
quarch_status quarch_calibrate_coherent_sigma(const char* data_dir,
                                              const char* backend,
                                              double target_d0,
                                              int64_t shots, uint64_t seed,
                                              double* out_sigma);

/* Human-readable topology summary (name, qubit count, degree stats, edge
 * list). */
quarch_status quarch_topology_info(const char* data_dir, const char* name,
                                   char** out);

/* Probability of guessing an n-bit hidden string classically from one
 * query: 2^(1-n). */
quarch_status quarch_classical_baseline(int n, double* out);

#ifdef __cplusplus
}
#endif

#endif /* QUARCH_H_ */
