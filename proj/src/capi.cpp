// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "quarch.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "backend.hpp"
#include "bench.hpp"
#include "calibrate.hpp"
#include "circuit.hpp"
#include "error.hpp"
#include "noise.hpp"
#include "plot.hpp"
#include "statevector.hpp"
#include "topology.hpp"
#include "transpiler.hpp"

struct quarch_circuit {
  quarch::Circuit impl;
};
struct quarch_topology {
  quarch::Topology impl;
};
struct quarch_backend {
  quarch::Backend impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const char* what) { g_last_error = what ? what : "unknown"; }

template <typename F>
quarch_status wrap(F&& f) noexcept {
  try {
    f();
    return QUARCH_OK;
  } catch (const quarch::ParseError& e) {
    set_error(e.what());
    return QUARCH_ERR_PARSE;
  } catch (const quarch::NoConvergence& e) {
    set_error(e.what());
    return QUARCH_ERR_NO_CONVERGENCE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return QUARCH_ERR_INVALID_ARGUMENT;
  } catch (const std::out_of_range& e) {
    set_error(e.what());
    return QUARCH_ERR_INVALID_ARGUMENT;
  } catch (const std::logic_error& e) {
    set_error(e.what());
    return QUARCH_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return QUARCH_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return QUARCH_ERR_INTERNAL;
  }
}

void require(bool ok, const char* why) {
  if (!ok) throw std::invalid_argument(why);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string data_dir_of(const char* data_dir) {
  return quarch::resolve_data_dir(data_dir ? data_dir : "");
}

// NULL -> default pipeline; "" -> decompose only; else comma-separated.
std::optional<std::vector<std::string>> split_passes(const char* csv) {
  if (csv == nullptr) return std::nullopt;
  std::vector<std::string> out;
  std::string cur;
  for (const char* p = csv; *p; ++p) {
    if (*p == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (*p != ' ') {
      cur += *p;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::string histogram_json(const quarch::Histogram& h) {
  nlohmann::ordered_json j;
  j["shots"] = h.shots;
  nlohmann::ordered_json counts = nlohmann::ordered_json::object();
  for (const auto& [bits, n] : h.counts) counts[bits] = n;
  j["counts"] = std::move(counts);
  return j.dump();
}

quarch::FitModel parse_fit_model(const char* model) {
  require(model != nullptr, "model must be 'gaussian' or 'linear'");
  const std::string m = model;
  if (m == "gaussian") return quarch::FitModel::Gaussian;
  if (m == "linear") return quarch::FitModel::Linear;
  throw std::invalid_argument("model must be 'gaussian' or 'linear'");
}

quarch::FitResult fit_with(quarch::FitModel model,
                           const std::vector<quarch::ExperimentRecord>& rs) {
  const auto pts = quarch::points_from_records(rs);
  return model == quarch::FitModel::Gaussian
             ? quarch::fit_gaussian(pts)
             : quarch::fit_linear_first4(pts);
}

}  // namespace

extern "C" {

const char* quarch_version(void) { return "0.1.0"; }

const char* quarch_last_error(void) { return g_last_error.c_str(); }

void quarch_string_free(char* s) { std::free(s); }

quarch_status quarch_circuit_parse(const char* text, quarch_circuit** out) {
  return wrap([&] {
    require(text && out, "null argument");
    *out = new quarch_circuit{quarch::parse_circuit(text)};
  });
}

quarch_status quarch_circuit_format(const quarch_circuit* c, char** out) {
  return wrap([&] {
    require(c && out, "null argument");
    *out = dup_string(quarch::format_circuit(c->impl));
  });
}

quarch_status quarch_circuit_validate(const quarch_circuit* c, char** out) {
  return wrap([&] {
    require(c && out, "null argument");
    std::string joined;
    for (const std::string& e : quarch::validate(c->impl)) {
      if (!joined.empty()) joined += '\n';
      joined += e;
    }
    *out = dup_string(joined);
  });
}

void quarch_circuit_free(quarch_circuit* c) { delete c; }

int quarch_circuit_n_qubits(const quarch_circuit* c) {
  return c ? c->impl.n_qubits : 0;
}

int quarch_circuit_two_qubit_gate_count(const quarch_circuit* c) {
  return c ? quarch::two_qubit_gate_count(c->impl) : 0;
}

quarch_status quarch_build_spam(int prep_one, quarch_circuit** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = new quarch_circuit{quarch::build_spam_circuit(prep_one != 0)};
  });
}

quarch_status quarch_build_cnot_chain(int blocks, quarch_circuit** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = new quarch_circuit{quarch::build_cnot_chain(blocks)};
  });
}

quarch_status quarch_build_swap_chain(int repeats, quarch_circuit** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = new quarch_circuit{quarch::build_swap_chain(repeats)};
  });
}

quarch_status quarch_build_bv(int n, const char* hidden,
                              quarch_circuit** out) {
  return wrap([&] {
    require(hidden && out, "null argument");
    *out = new quarch_circuit{quarch::build_bv(n, hidden)};
  });
}

quarch_status quarch_transpile(const quarch_circuit* c,
                               const char* native_set, const char* passes_csv,
                               quarch_circuit** out) {
  return wrap([&] {
    require(c && native_set && out, "null argument");
    const auto native = quarch::parse_native_set(native_set);
    require(native.has_value(), "native set must be xx, zx, or cz");
    const auto passes = split_passes(passes_csv);
    *out = new quarch_circuit{
        passes ? quarch::transpile(c->impl, *native, *passes)
               : quarch::transpile(c->impl, *native)};
  });
}

quarch_status quarch_topology_parse(const char* text, quarch_topology** out) {
  return wrap([&] {
    require(text && out, "null argument");
    *out = new quarch_topology{quarch::parse_topology(text)};
  });
}

quarch_status quarch_topology_load(const char* data_dir, const char* name,
                                   quarch_topology** out) {
  return wrap([&] {
    require(name && out, "null argument");
    *out = new quarch_topology{
        quarch::load_topology(data_dir_of(data_dir), name)};
  });
}

quarch_status quarch_topology_format(const quarch_topology* g, char** out) {
  return wrap([&] {
    require(g && out, "null argument");
    *out = dup_string(quarch::format_topology(g->impl));
  });
}

void quarch_topology_free(quarch_topology* g) { delete g; }

int quarch_topology_n_qubits(const quarch_topology* g) {
  return g ? g->impl.n_qubits : 0;
}

int quarch_topology_max_degree(const quarch_topology* g) {
  return g ? g->impl.max_degree() : 0;
}

quarch_status quarch_topology_is_adjacent(const quarch_topology* g, int a,
                                          int b, int* out) {
  return wrap([&] {
    require(g && out, "null argument");
    *out = g->impl.is_adjacent(a, b) ? 1 : 0;
  });
}

quarch_status quarch_shortest_path(const quarch_topology* g, int a, int b,
                                   int* buf, int buf_len, int* out_len) {
  return wrap([&] {
    require(g && buf && out_len, "null argument");
    const std::vector<int> path = quarch::shortest_path(g->impl, a, b);
    require(static_cast<int>(path.size()) <= buf_len,
            "path buffer too small");
    for (std::size_t i = 0; i < path.size(); ++i) buf[i] = path[i];
    *out_len = static_cast<int>(path.size());
  });
}

quarch_status quarch_route(const quarch_circuit* c, const quarch_topology* g,
                           const int* placement, int placement_len,
                           quarch_circuit** out_circuit, int* out_swaps,
                           int* device_map_buf, int device_map_len,
                           int* out_n_active) {
  return wrap([&] {
    require(c && g && out_circuit, "null argument");
    std::vector<int> place;
    if (placement != nullptr)
      place.assign(placement, placement + placement_len);
    quarch::RouteResult r = quarch::route(c->impl, g->impl, place);
    const int n_active = static_cast<int>(r.device_of_compact.size());
    if (device_map_buf != nullptr) {
      require(device_map_len >= n_active, "device map buffer too small");
      for (int i = 0; i < n_active; ++i)
        device_map_buf[i] = r.device_of_compact[static_cast<std::size_t>(i)];
    }
    if (out_swaps != nullptr) *out_swaps = r.swaps_inserted;
    if (out_n_active != nullptr) *out_n_active = n_active;
    *out_circuit = new quarch_circuit{std::move(r.circuit)};
  });
}

quarch_status quarch_run_ideal_probs(const quarch_circuit* c, double* buf,
                                     int64_t buf_len, int64_t* out_len) {
  return wrap([&] {
    require(c && buf && out_len, "null argument");
    const quarch::StateVector state = quarch::run_ideal(c->impl);
    const std::vector<double> probs =
        state.marginal_probs(c->impl.measured);
    require(static_cast<int64_t>(probs.size()) <= buf_len,
            "probability buffer too small");
    for (std::size_t i = 0; i < probs.size(); ++i) buf[i] = probs[i];
    *out_len = static_cast<int64_t>(probs.size());
  });
}

quarch_status quarch_sample_ideal_json(const quarch_circuit* c,
                                       int64_t shots, uint64_t seed,
                                       char** out_histogram_json) {
  return wrap([&] {
    require(c && out_histogram_json, "null argument");
    const quarch::StateVector state = quarch::run_ideal(c->impl);
    const quarch::Histogram h =
        quarch::sample(state, c->impl.measured, shots, seed);
    *out_histogram_json = dup_string(histogram_json(h));
  });
}

quarch_status quarch_backend_load(const char* data_dir, const char* name,
                                  quarch_backend** out) {
  return wrap([&] {
    require(name && out, "null argument");
    *out =
        new quarch_backend{quarch::load_backend(data_dir_of(data_dir), name)};
  });
}

void quarch_backend_free(quarch_backend* b) { delete b; }

const char* quarch_backend_name(const quarch_backend* b) {
  return b ? b->impl.config.name.c_str() : "";
}

quarch_status quarch_backend_config_format(const quarch_backend* b,
                                           char** out) {
  return wrap([&] {
    require(b && out, "null argument");
    *out = dup_string(quarch::format_backend_config(b->impl.config));
  });
}

quarch_status quarch_list_backends(const char* data_dir, char** out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    std::string joined;
    for (const std::string& s : quarch::list_backends(data_dir_of(data_dir))) {
      joined += s;
      joined += '\n';
    }
    *out = dup_string(joined);
  });
}

quarch_status quarch_run_noisy_json(const quarch_circuit* c,
                                    const quarch_backend* b, int64_t shots,
                                    uint64_t seed, const int* device_map,
                                    int map_len, char** out_histogram_json) {
  return wrap([&] {
    require(c && b && out_histogram_json, "null argument");
    std::vector<int> map;
    const std::vector<int>* map_ptr = nullptr;
    const quarch::Topology* topo_ptr = nullptr;
    if (device_map != nullptr) {
      map.assign(device_map, device_map + map_len);
      map_ptr = &map;
      topo_ptr = &b->impl.topology;
    }
    const quarch::Histogram h =
        quarch::run_noisy(c->impl, b->impl.config.profile, shots, seed,
                          topo_ptr, map_ptr);
    *out_histogram_json = dup_string(histogram_json(h));
  });
}

quarch_status quarch_sweep_run(const char* data_dir, const char* experiment,
                               const char* backend, const int64_t* grid,
                               int grid_len, int bv_n, int64_t shots,
                               uint64_t seed, const char* passes_csv,
                               char** out_records_jsonl) {
  return wrap([&] {
    require(experiment && backend && out_records_jsonl, "null argument");
    const auto exp = quarch::parse_experiment(experiment);
    require(exp.has_value(),
            "experiment must be spam, cnot-chain, swap-chain, or bv");
    const quarch::Backend be =
        quarch::load_backend(data_dir_of(data_dir), backend);
    quarch::SweepSpec spec;
    spec.experiment = *exp;
    if (grid != nullptr && grid_len > 0)
      spec.grid.assign(grid, grid + grid_len);
    spec.bv_n = bv_n;
    spec.shots = shots;
    spec.seed = seed;
    if (const auto passes = split_passes(passes_csv)) {
      spec.passes = *passes;
      spec.passes_overridden = true;
    }
    *out_records_jsonl =
        dup_string(quarch::format_records(quarch::sweep(spec, be)));
  });
}

quarch_status quarch_fit_records(const char* records_jsonl,
                                 const char* model, char** out_fit_json) {
  return wrap([&] {
    require(records_jsonl && out_fit_json, "null argument");
    const auto records = quarch::parse_records(records_jsonl);
    require(!records.empty(), "no records to fit");
    *out_fit_json = dup_string(
        quarch::format_fit(fit_with(parse_fit_model(model), records)));
  });
}

quarch_status quarch_plot_records(const char* records_jsonl,
                                  const char* fit_model, char** out_svg) {
  return wrap([&] {
    require(records_jsonl && out_svg, "null argument");
    const auto records = quarch::parse_records(records_jsonl);
    std::optional<quarch::FitResult> fit;
    if (fit_model != nullptr)
      fit = fit_with(parse_fit_model(fit_model), records);
    *out_svg = dup_string(quarch::render_svg(records, fit));
  });
}

quarch_status quarch_calibrate_depolarizing(const char* data_dir,
                                            const char* backend,
                                            double target_slope,
                                            int64_t shots, uint64_t seed,
                                            double* out_p2) {
  return wrap([&] {
    require(backend && out_p2, "null argument");
    const quarch::Backend be =
        quarch::load_backend(data_dir_of(data_dir), backend);
    *out_p2 = quarch::calibrate_depolarizing(be, target_slope, shots, seed);
  });
}

quarch_status quarch_calibrate_coherent_sigma(const char* data_dir,
                                              const char* backend,
                                              double target_d0,
                                              int64_t shots, uint64_t seed,
                                              double* out_sigma) {
  return wrap([&] {
    require(backend && out_sigma, "null argument");
    const quarch::Backend be =
        quarch::load_backend(data_dir_of(data_dir), backend);
    *out_sigma =
        quarch::calibrate_coherent_sigma(be, target_d0, shots, seed);
  });
}

quarch_status quarch_topology_info(const char* data_dir, const char* name,
                                   char** out) {
  return wrap([&] {
    require(name && out, "null argument");
    const quarch::Topology g =
        quarch::load_topology(data_dir_of(data_dir), name);
    std::ostringstream text;
    text << "name " << g.name << "\n";
    text << "qubits " << g.n_qubits << "\n";
    text << "edges " << g.edges.size() << "\n";
    text << "max_degree " << g.max_degree() << "\n";
    for (const auto& [a, b] : g.edges)
      text << "edge " << a << " " << b << "\n";
    *out = dup_string(text.str());
  });
}

quarch_status quarch_classical_baseline(int n, double* out) {
  return wrap([&] {
    require(out != nullptr, "null argument");
    *out = quarch::classical_baseline(n);
  });
}

}  // extern "C"
