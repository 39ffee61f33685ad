// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Talks to the core exclusively through the C API
// in quarch.h.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "quarch.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

struct StringDeleter {
  void operator()(char* s) const { quarch_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

int exit_code_for(quarch_status status) {
  switch (status) {
    case QUARCH_OK:
      return kExitOk;
    case QUARCH_ERR_INVALID_ARGUMENT:
      return kExitUsage;
    default:
      return kExitRuntime;
  }
}

int fail(quarch_status status) {
  std::cerr << "error: " << quarch_last_error() << "\n";
  return exit_code_for(status);
}

// "1,2,3", "0..10", and "2..60:2" (inclusive ranges) may be mixed.
bool parse_grid(const std::string& text, std::vector<int64_t>& out) {
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    const auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoll(part));
        continue;
      }
      const int64_t lo = std::stoll(part.substr(0, dots));
      std::string rest = part.substr(dots + 2);
      int64_t step = 1;
      if (const auto colon = rest.find(':'); colon != std::string::npos) {
        step = std::stoll(rest.substr(colon + 1));
        rest.resize(colon);
      }
      const int64_t hi = std::stoll(rest);
      if (step < 1 || hi < lo) return false;
      for (int64_t v = lo; v <= hi; v += step) out.push_back(v);
    } catch (const std::exception&) {
      return false;
    }
  }
  return !out.empty();
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return false;
  out << content;
  return out.good();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quarch: transpile, route, and simulate noisy quantum "
               "circuit experiments"};
  app.require_subcommand(1);
  std::string data_dir;
  app.add_option("--data-dir", data_dir,
                 "Data directory holding backends/ and topologies/ "
                 "(default: $QUARCH_DATA_DIR, then ./data)");

  // --- run ---
  auto* run = app.add_subcommand(
      "run", "Run an experiment sweep and emit one record per grid point");
  std::string run_experiment, run_backend, run_grid, run_passes, run_out;
  int64_t run_shots = 1024;
  uint64_t run_seed = 1;
  int run_n = 4;
  bool run_passes_given = false;
  run->add_option("experiment", run_experiment,
                  "spam | cnot-chain | swap-chain | bv")
      ->required();
  run->add_option("--backend", run_backend, "Backend preset name")
      ->required();
  run->add_option("--shots", run_shots, "Shots per grid point");
  run->add_option("--seed", run_seed, "Base seed");
  run->add_option("--grid,--weights,--depths,--repeats", run_grid,
                  "Parameter grid, e.g. 1,2,3 or 0..10 or 2..60:2 "
                  "(default: per-experiment grid)");
  run->add_option("--n", run_n, "BV data-qubit count (bv only)");
  run->add_option("--passes", run_passes,
                  "Comma-separated transpiler pass list (empty string = "
                  "decompose only)")
      ->each([&](const std::string&) { run_passes_given = true; });
  run->add_option("--out", run_out, "Also write records to this file");

  // --- fit ---
  auto* fit = app.add_subcommand("fit", "Fit a model to a record file");
  std::string fit_model, fit_records;
  fit->add_option("--model", fit_model, "gaussian | linear")->required();
  fit->add_option("--records", fit_records, "Record file (JSON Lines)")
      ->required();

  // --- plot ---
  auto* plot = app.add_subcommand("plot", "Render records as an SVG chart");
  std::string plot_records, plot_out, plot_fit;
  plot->add_option("--records", plot_records, "Record file (JSON Lines)")
      ->required();
  plot->add_option("--out", plot_out, "Output SVG path")->required();
  plot->add_option("--fit", plot_fit,
                   "Overlay a fitted curve: gaussian | linear");

  // --- calibrate ---
  auto* cal = app.add_subcommand(
      "calibrate", "Solve a noise parameter for a reference observable");
  std::string cal_mode, cal_backend;
  double cal_target = 0.0;
  int64_t cal_shots = 0;
  uint64_t cal_seed = 1;
  cal->add_option("mode", cal_mode,
                  "depol (p2 from swap-chain slope) | coherent (sigma from "
                  "cnot-chain d0)")
      ->required();
  cal->add_option("--backend", cal_backend, "Backend preset name")
      ->required();
  cal->add_option("--target", cal_target,
                  "Target slope magnitude (depol) or d0 (coherent)")
      ->required();
  cal->add_option("--shots", cal_shots,
                  "Shots per point (default 8192 depol / 4096 coherent)");
  cal->add_option("--seed", cal_seed, "Base seed");

  // --- topology-info ---
  auto* info =
      app.add_subcommand("topology-info", "Describe a topology preset");
  std::string info_name;
  info->add_option("name", info_name, "Topology preset name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const char* dir = data_dir.empty() ? nullptr : data_dir.c_str();

  if (run->parsed()) {
    std::vector<int64_t> grid;
    if (!run_grid.empty() && !parse_grid(run_grid, grid)) {
      std::cerr << "error: bad grid '" << run_grid << "'\n";
      return kExitUsage;
    }
    OwnedString records;
    char* raw = nullptr;
    const quarch_status status = quarch_sweep_run(
        dir, run_experiment.c_str(), run_backend.c_str(),
        grid.empty() ? nullptr : grid.data(), static_cast<int>(grid.size()),
        run_n, run_shots, run_seed,
        run_passes_given ? run_passes.c_str() : nullptr, &raw);
    if (status != QUARCH_OK) return fail(status);
    records.reset(raw);
    std::cout << records.get();
    if (!run_out.empty() && !write_file(run_out, records.get())) {
      std::cerr << "error: cannot write '" << run_out << "'\n";
      return kExitRuntime;
    }
    return kExitOk;
  }

  if (fit->parsed()) {
    std::string records;
    if (!read_file(fit_records, records)) {
      std::cerr << "error: cannot read '" << fit_records << "'\n";
      return kExitRuntime;
    }
    OwnedString result;
    char* raw = nullptr;
    const quarch_status status =
        quarch_fit_records(records.c_str(), fit_model.c_str(), &raw);
    if (status != QUARCH_OK) return fail(status);
    result.reset(raw);
    std::cout << result.get() << "\n";
    return kExitOk;
  }

  if (plot->parsed()) {
    std::string records;
    if (!read_file(plot_records, records)) {
      std::cerr << "error: cannot read '" << plot_records << "'\n";
      return kExitRuntime;
    }
    OwnedString svg;
    char* raw = nullptr;
    const quarch_status status = quarch_plot_records(
        records.c_str(), plot_fit.empty() ? nullptr : plot_fit.c_str(),
        &raw);
    if (status != QUARCH_OK) return fail(status);
    svg.reset(raw);
    if (!write_file(plot_out, svg.get())) {
      std::cerr << "error: cannot write '" << plot_out << "'\n";
      return kExitRuntime;
    }
    return kExitOk;
  }

  if (cal->parsed()) {
    double value = 0.0;
    quarch_status status;
    if (cal_mode == "depol") {
      status = quarch_calibrate_depolarizing(
          dir, cal_backend.c_str(), cal_target,
          cal_shots > 0 ? cal_shots : 8192, cal_seed, &value);
      if (status != QUARCH_OK) return fail(status);
      std::printf("p2 = %.10g\n", value);
    } else if (cal_mode == "coherent") {
      status = quarch_calibrate_coherent_sigma(
          dir, cal_backend.c_str(), cal_target,
          cal_shots > 0 ? cal_shots : 4096, cal_seed, &value);
      if (status != QUARCH_OK) return fail(status);
      std::printf("sigma = %.10g\n", value);
    } else {
      std::cerr << "error: calibrate mode must be depol or coherent\n";
      return kExitUsage;
    }
    return kExitOk;
  }

  if (info->parsed()) {
    OwnedString text;
    char* raw = nullptr;
    const quarch_status status =
        quarch_topology_info(dir, info_name.c_str(), &raw);
    if (status != QUARCH_OK) return fail(status);
    text.reset(raw);
    std::cout << text.get();
    return kExitOk;
  }

  return kExitUsage;  // unreachable: require_subcommand(1)
}
