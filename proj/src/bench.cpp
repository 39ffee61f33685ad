// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "bench.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

#include "json.hpp"

#include "error.hpp"
#include "rng.hpp"
#include "statevector.hpp"

namespace quarch {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr double kGoldenRatio = 0.6180339887498949;

std::vector<std::pair<double, double>> sorted_by_x(
    std::vector<std::pair<double, double>> points) {
  std::stable_sort(points.begin(), points.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  return points;
}

}  // namespace

std::string_view experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Spam: return "spam";
    case Experiment::CnotChain: return "cnot-chain";
    case Experiment::SwapChain: return "swap-chain";
    case Experiment::Bv: return "bv";
  }
  return "?";
}

std::optional<Experiment> parse_experiment(std::string_view name) {
  if (name == "spam") return Experiment::Spam;
  if (name == "cnot-chain") return Experiment::CnotChain;
  if (name == "swap-chain") return Experiment::SwapChain;
  if (name == "bv") return Experiment::Bv;
  return std::nullopt;
}

std::string format_record(const ExperimentRecord& r) {
  ordered_json j;
  j["backend"] = r.backend;
  j["experiment"] = r.experiment;
  j["parameter"] = r.parameter;
  j["shots"] = r.shots;
  j["successes"] = r.successes;
  j["seed"] = r.seed;
  j["ci95"] = r.ci95;
  return j.dump();
}

std::string format_records(const std::vector<ExperimentRecord>& rs) {
  std::string out;
  for (const ExperimentRecord& r : rs) {
    out += format_record(r);
    out += '\n';
  }
  return out;
}

std::vector<ExperimentRecord> parse_records(const std::string& text) {
  std::vector<ExperimentRecord> out;
  std::size_t start = 0;
  int line_no = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ordered_json j;
    try {
      j = ordered_json::parse(line);
    } catch (const std::exception& e) {
      throw ParseError("record line " + std::to_string(line_no) + ": " +
                       e.what());
    }
    const auto fail = [&](const std::string& why) -> ParseError {
      return ParseError("record line " + std::to_string(line_no) + ": " + why);
    };
    if (!j.is_object()) throw fail("expected an object");
    for (const char* key : {"backend", "experiment", "parameter", "shots",
                            "successes", "seed", "ci95"})
      if (!j.contains(key)) throw fail(std::string("missing field '") + key + "'");
    ExperimentRecord r;
    try {
      r.backend = j.at("backend").get<std::string>();
      r.experiment = j.at("experiment").get<std::string>();
      r.parameter = j.at("parameter").get<std::int64_t>();
      r.shots = j.at("shots").get<std::int64_t>();
      r.successes = j.at("successes").get<std::int64_t>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.ci95 = j.at("ci95").get<double>();
    } catch (const std::exception& e) {
      throw fail(e.what());
    }
    if (r.shots < 0 || r.successes < 0 || r.successes > r.shots)
      throw fail("successes must lie in [0, shots]");
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_fit(const FitResult& f) {
  ordered_json j;
  if (f.model == FitModel::Gaussian) {
    j["model"] = "gaussian";
    j["d0"] = f.p0;
    j["amplitude"] = f.p1;
  } else {
    j["model"] = "linear";
    j["intercept"] = f.p0;
    j["slope"] = f.p1;
  }
  j["residual"] = f.residual;
  return j.dump();
}

Circuit build_spam_circuit(bool prep_one) {
  Circuit c(1);
  c.initial_ones[0] = prep_one;
  c.measured = {0};
  return c;
}

Circuit build_cnot_chain(int blocks) {
  if (blocks < 1) throw std::invalid_argument("blocks must be >= 1");
  Circuit c(2);
  c.add(make_gate1(GateKind::H, 0));
  for (int b = 0; b < blocks; ++b) {
    c.add(make_gate1(GateKind::X, 0));
    c.add(make_gate2(GateKind::CNOT, 0, 1));
    c.add(make_gate1(GateKind::Y, 0));
    c.add(make_gate2(GateKind::CNOT, 0, 1));
  }
  c.add(make_gate1(GateKind::H, 0));
  c.measured = {0};
  return c;
}

Circuit build_swap_chain(int repeats) {
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  Circuit c(2);
  c.add(make_gate1(GateKind::H, 0));
  c.add(make_gate1(GateKind::H, 1));
  for (int r = 0; r < repeats; ++r) c.add(make_gate2(GateKind::SWAP, 0, 1));
  c.add(make_gate1(GateKind::H, 0));
  c.add(make_gate1(GateKind::H, 1));
  c.measured = {0, 1};
  return c;
}

Circuit build_bv(int n, const std::string& hidden) {
  if (n < 1) throw std::invalid_argument("bv needs at least one data qubit");
  if (static_cast<int>(hidden.size()) != n)
    throw std::invalid_argument("hidden string length mismatch");
  if (n + 1 > kMaxQubits)
    throw std::invalid_argument("bv circuit exceeds the qubit cap");
  Circuit c(n + 1);
  const int ancilla = n;
  c.initial_ones[static_cast<std::size_t>(ancilla)] = true;
  for (int q = 0; q <= n; ++q) c.add(make_gate1(GateKind::H, q));
  for (int i = 0; i < n; ++i) {
    const char bit = hidden[static_cast<std::size_t>(i)];
    if (bit != '0' && bit != '1')
      throw std::invalid_argument("hidden string must be binary");
    if (bit == '1') c.add(make_gate2(GateKind::CNOT, i, ancilla));
  }
  for (int q = 0; q < n; ++q) c.add(make_gate1(GateKind::H, q));
  for (int q = 0; q < n; ++q) c.measured.push_back(q);
  return c;
}

std::string hidden_for_weight(int n, int weight) {
  if (weight < 0 || weight > n)
    throw std::invalid_argument("weight out of range");
  std::string s(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < weight; ++i) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

double classical_baseline(int n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  return std::ldexp(1.0, 1 - n);
}

std::vector<std::int64_t> default_grid(Experiment e) {
  switch (e) {
    case Experiment::Spam: return {0, 1};
    case Experiment::CnotChain: {
      std::vector<std::int64_t> g;
      for (std::int64_t d = 2; d <= 60; d += 2) g.push_back(d);
      return g;
    }
    case Experiment::SwapChain: {
      std::vector<std::int64_t> g;
      for (std::int64_t r = 1; r <= 12; ++r) g.push_back(r);
      return g;
    }
    case Experiment::Bv: return {0, 1, 2, 3, 4};
  }
  return {};
}

std::vector<int> bv_placement(const Topology& g, int n_data) {
  if (n_data + 1 > g.n_qubits)
    throw std::invalid_argument("bv circuit larger than topology");
  const int max_deg = g.max_degree();
  int ancilla = 0;
  for (int q = 0; q < g.n_qubits; ++q) {
    if (g.degree(q) == max_deg) {
      ancilla = q;
      break;
    }
  }
  // BFS order from the ancilla: nearest vertices host the data qubits.
  std::vector<int> order;
  std::vector<bool> seen(static_cast<std::size_t>(g.n_qubits), false);
  std::deque<int> frontier{ancilla};
  seen[static_cast<std::size_t>(ancilla)] = true;
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop_front();
    if (cur != ancilla) order.push_back(cur);
    for (int nb : g.neighbors(cur)) {
      if (!seen[static_cast<std::size_t>(nb)]) {
        seen[static_cast<std::size_t>(nb)] = true;
        frontier.push_back(nb);
      }
    }
  }
  std::vector<int> place(static_cast<std::size_t>(n_data) + 1, -1);
  for (int i = 0; i < n_data; ++i)
    place[static_cast<std::size_t>(i)] = order[static_cast<std::size_t>(i)];
  place[static_cast<std::size_t>(n_data)] = ancilla;
  return place;
}

namespace {

Circuit build_for_point(const SweepSpec& spec, std::int64_t parameter) {
  switch (spec.experiment) {
    case Experiment::Spam:
      if (parameter != 0 && parameter != 1)
        throw std::invalid_argument("spam parameter must be 0 or 1");
      return build_spam_circuit(parameter == 1);
    case Experiment::CnotChain:
      if (parameter < 2 || parameter % 2 != 0)
        throw std::invalid_argument(
            "cnot-chain depth must be a positive even CNOT count");
      return build_cnot_chain(static_cast<int>(parameter / 2));
    case Experiment::SwapChain:
      return build_swap_chain(static_cast<int>(parameter));
    case Experiment::Bv:
      return build_bv(spec.bv_n,
                      hidden_for_weight(spec.bv_n,
                                        static_cast<int>(parameter)));
  }
  throw std::invalid_argument("unknown experiment");
}

}  // namespace

std::vector<ExperimentRecord> sweep(const SweepSpec& spec,
                                    const Backend& backend) {
  std::vector<std::int64_t> grid = spec.grid;
  if (grid.empty()) {
    grid = default_grid(spec.experiment);
    if (spec.experiment == Experiment::Bv) {
      grid.clear();
      for (std::int64_t w = 0; w <= spec.bv_n; ++w) grid.push_back(w);
    }
  }

  std::vector<std::string> passes;
  if (spec.passes_overridden) {
    passes = spec.passes;
  } else if (spec.experiment == Experiment::Spam ||
             spec.experiment == Experiment::Bv) {
    passes = kDefaultPasses;
  }
  // Chain experiments keep the empty list: decompose only. Their dressing
  // pulses are the object under test and must survive transpilation.

  std::vector<ExperimentRecord> out;
  for (const std::int64_t parameter : grid) {
    const Circuit logical = build_for_point(spec, parameter);

    // The success target is the noiseless outcome, which must be
    // deterministic for every experiment in the suite.
    const StateVector ideal = run_ideal(logical);
    const std::vector<double> probs = ideal.marginal_probs(logical.measured);
    std::size_t target = 0;
    for (std::size_t i = 1; i < probs.size(); ++i)
      if (probs[i] > probs[target]) target = i;
    if (probs[target] < 1.0 - 1e-9)
      throw std::logic_error("experiment target is not deterministic");
    std::string target_bits(logical.measured.size(), '0');
    for (std::size_t i = 0; i < target_bits.size(); ++i)
      if (target >> (target_bits.size() - 1 - i) & 1ULL)
        target_bits[i] = '1';

    std::vector<int> placement;
    if (spec.experiment == Experiment::Bv)
      placement = bv_placement(backend.topology, spec.bv_n);
    const RouteResult routed = route(logical, backend.topology, placement);
    const Circuit native =
        transpile(routed.circuit, backend.config.native, passes);

    const std::uint64_t point_seed = derive_seed(
        spec.seed,
        fnv1a64(std::string(experiment_name(spec.experiment)) + ":" +
                std::to_string(parameter)));
    const Histogram h =
        run_noisy(native, backend.config.profile, spec.shots, point_seed,
                  &backend.topology, &routed.device_of_compact);

    ExperimentRecord r;
    r.backend = backend.config.name;
    r.experiment = std::string(experiment_name(spec.experiment));
    r.parameter = parameter;
    r.shots = spec.shots;
    const auto it = h.counts.find(target_bits);
    r.successes = (it == h.counts.end()) ? 0 : it->second;
    r.seed = point_seed;
    r.ci95 = success_probability(h, target_bits).second;
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::pair<double, double>> points_from_records(
    const std::vector<ExperimentRecord>& rs) {
  std::vector<std::pair<double, double>> pts;
  for (const ExperimentRecord& r : rs) {
    if (r.shots < 1) throw std::invalid_argument("record has no shots");
    pts.emplace_back(static_cast<double>(r.parameter),
                     static_cast<double>(r.successes) /
                         static_cast<double>(r.shots));
  }
  return sorted_by_x(std::move(pts));
}

namespace {

// Profiled objective: for fixed d0 the optimal amplitude is linear least
// squares in closed form, clamped to (0, 0.5].
struct GaussianObjective {
  const std::vector<std::pair<double, double>>& pts;

  std::pair<double, double> eval(double d0) const {  // (sse, amplitude)
    double swy = 0.0, sww = 0.0;
    for (const auto& [d, y] : pts) {
      const double w = std::exp(-(d / d0) * (d / d0));
      swy += w * (y - 0.5);
      sww += w * w;
    }
    double a = (sww > 0) ? swy / sww : 0.0;
    a = std::clamp(a, 1e-12, 0.5);
    double sse = 0.0;
    for (const auto& [d, y] : pts) {
      const double w = std::exp(-(d / d0) * (d / d0));
      const double e = y - 0.5 - a * w;
      sse += e * e;
    }
    return {sse, a};
  }
};

}  // namespace

FitResult fit_gaussian(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4)
    throw std::invalid_argument("gaussian fit needs at least 4 points");
  bool all_equal = true;
  for (const auto& [d, y] : points)
    if (std::abs(y - points.front().second) > 0) all_equal = false;
  if (all_equal) throw NoConvergence("degenerate data: all successes equal");

  double d_max = 0.0;
  for (const auto& [d, y] : points) d_max = std::max(d_max, d);
  if (d_max <= 0) throw std::invalid_argument("depths must be positive");

  const GaussianObjective obj{points};
  const double lo = 0.2, hi = 20.0 * d_max;
  constexpr int kGridPoints = 2000;
  double best_d0 = lo, best_sse = obj.eval(lo).first;
  for (int i = 1; i < kGridPoints; ++i) {
    const double t = static_cast<double>(i) / (kGridPoints - 1);
    const double d0 = lo * std::pow(hi / lo, t);
    const double sse = obj.eval(d0).first;
    if (sse < best_sse) {
      best_sse = sse;
      best_d0 = d0;
    }
  }

  // Golden-section refinement around the best grid cell.
  const double step = std::pow(hi / lo, 1.0 / (kGridPoints - 1));
  double a = best_d0 / step, b = best_d0 * step;
  double x1 = b - kGoldenRatio * (b - a), x2 = a + kGoldenRatio * (b - a);
  double f1 = obj.eval(x1).first, f2 = obj.eval(x2).first;
  for (int i = 0; i < 80; ++i) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGoldenRatio * (b - a);
      f1 = obj.eval(x1).first;
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGoldenRatio * (b - a);
      f2 = obj.eval(x2).first;
    }
  }
  const double d0 = 0.5 * (a + b);
  const auto [sse, amplitude] = obj.eval(d0);

  if (d0 >= 0.9 * hi)
    throw NoConvergence("no decay: fitted d0 is unbounded");

  FitResult f;
  f.model = FitModel::Gaussian;
  f.p0 = d0;
  f.p1 = amplitude;
  f.residual = sse;
  return f;
}

FitResult fit_linear_first4(
    const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 4)
    throw std::invalid_argument("linear fit needs at least 4 points");
  const auto pts = sorted_by_x(points);
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < 4; ++i) {
    sx += pts[static_cast<std::size_t>(i)].first;
    sy += pts[static_cast<std::size_t>(i)].second;
    sxx += pts[static_cast<std::size_t>(i)].first *
           pts[static_cast<std::size_t>(i)].first;
    sxy += pts[static_cast<std::size_t>(i)].first *
           pts[static_cast<std::size_t>(i)].second;
  }
  const double denom = 4.0 * sxx - sx * sx;
  if (denom == 0) throw std::invalid_argument("degenerate depths");
  const double slope = (4.0 * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / 4.0;
  double sse = 0;
  for (int i = 0; i < 4; ++i) {
    const double e = pts[static_cast<std::size_t>(i)].second -
                     (intercept + slope * pts[static_cast<std::size_t>(i)].first);
    sse += e * e;
  }
  FitResult f;
  f.model = FitModel::Linear;
  f.p0 = intercept;
  f.p1 = slope;
  f.residual = sse;
  return f;
}

}  // namespace quarch
