// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "backend.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "error.hpp"

namespace quarch {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_probability(const std::string& key, const std::string& value,
                         int line_no, double lo = 0.0, double hi = 1.0) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || v < lo || v > hi)
    throw ParseError("backend config line " + std::to_string(line_no) +
                     ": bad value for '" + key + "'");
  return v;
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(12);
  out << v;
  return out.str();
}

// Exact stem match, else unique stem-prefix match among `stems`.
std::string resolve_stem(const std::vector<std::string>& stems,
                         const std::string& name, const std::string& what) {
  for (const std::string& s : stems)
    if (s == name) return s;
  std::vector<std::string> hits;
  for (const std::string& s : stems)
    if (s.rfind(name, 0) == 0) hits.push_back(s);
  if (hits.size() == 1) return hits.front();
  throw std::invalid_argument("unknown " + what + " '" + name + "'");
}

std::vector<std::string> list_stems(const std::filesystem::path& dir,
                                    const std::string& ext) {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
    if (entry.path().extension() == ext)
      out.push_back(entry.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string format_backend_config(const BackendConfig& cfg) {
  std::ostringstream out;
  out << "[backend]\n";
  out << "name = " << cfg.name << "\n";
  out << "topology = " << cfg.topology_file << "\n";
  out << "native_set = " << native_set_name(cfg.native) << "\n";
  out << "\n[spam]\n";
  out << "p_read_0 = " << fmt(cfg.profile.spam.p_read_0) << "\n";
  out << "p_read_1 = " << fmt(cfg.profile.spam.p_read_1) << "\n";
  out << "\n[depol]\n";
  out << "p2 = " << fmt(cfg.profile.depol.p2) << "\n";
  out << "p1 = " << fmt(cfg.profile.depol.p1) << "\n";
  out << "\n[coherent]\n";
  out << "sigma = " << fmt(cfg.profile.coherent.sigma) << "\n";
  out << "bias = " << fmt(cfg.profile.coherent.bias) << "\n";
  out << "run_jitter = " << fmt(cfg.profile.coherent.run_jitter) << "\n";
  out << "\n[crosstalk]\n";
  out << "p_ct = " << fmt(cfg.profile.crosstalk.p_ct) << "\n";
  return out.str();
}

BackendConfig parse_backend_config(const std::string& text) {
  BackendConfig cfg;
  bool saw_name = false, saw_topology = false, saw_native = false;
  bool saw_p1 = false;
  std::string section;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ParseError("backend config line " + std::to_string(line_no) +
                         ": unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "backend" && section != "spam" && section != "depol" &&
          section != "coherent" && section != "crosstalk")
        throw ParseError("backend config line " + std::to_string(line_no) +
                         ": unknown section '" + section + "'");
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("backend config line " + std::to_string(line_no) +
                       ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto unknown_key = [&]() -> ParseError {
      return ParseError("backend config line " + std::to_string(line_no) +
                        ": unknown key '" + key + "' in section [" + section +
                        "]");
    };

    if (section == "backend") {
      if (key == "name") {
        cfg.name = value;
        saw_name = true;
      } else if (key == "topology") {
        cfg.topology_file = value;
        saw_topology = true;
      } else if (key == "native_set") {
        const auto native = parse_native_set(value);
        if (!native)
          throw ParseError("backend config line " + std::to_string(line_no) +
                           ": native_set must be xx, zx, or cz");
        cfg.native = *native;
        saw_native = true;
      } else {
        throw unknown_key();
      }
    } else if (section == "spam") {
      if (key == "p_read_0")
        cfg.profile.spam.p_read_0 = parse_probability(key, value, line_no);
      else if (key == "p_read_1")
        cfg.profile.spam.p_read_1 = parse_probability(key, value, line_no);
      else
        throw unknown_key();
    } else if (section == "depol") {
      if (key == "p2")
        cfg.profile.depol.p2 = parse_probability(key, value, line_no);
      else if (key == "p1") {
        cfg.profile.depol.p1 = parse_probability(key, value, line_no);
        saw_p1 = true;
      } else {
        throw unknown_key();
      }
    } else if (section == "coherent") {
      if (key == "sigma")
        cfg.profile.coherent.sigma =
            parse_probability(key, value, line_no, 0.0, 10.0);
      else if (key == "bias")
        cfg.profile.coherent.bias =
            parse_probability(key, value, line_no, -10.0, 10.0);
      else if (key == "run_jitter")
        cfg.profile.coherent.run_jitter =
            parse_probability(key, value, line_no, 0.0, 10.0);
      else
        throw unknown_key();
    } else if (section == "crosstalk") {
      if (key == "p_ct")
        cfg.profile.crosstalk.p_ct = parse_probability(key, value, line_no);
      else
        throw unknown_key();
    } else {
      throw ParseError("backend config line " + std::to_string(line_no) +
                       ": key outside any section");
    }
  }

  if (!saw_name) throw ParseError("backend config: missing backend.name");
  if (!saw_topology)
    throw ParseError("backend config: missing backend.topology");
  if (!saw_native)
    throw ParseError("backend config: missing backend.native_set");
  if (!saw_p1) cfg.profile.depol.p1 = cfg.profile.depol.p2 / 10.0;
  return cfg;
}

std::string resolve_data_dir(const std::string& explicit_dir) {
  if (!explicit_dir.empty()) return explicit_dir;
  if (const char* env = std::getenv("QUARCH_DATA_DIR"); env && *env)
    return env;
  return "data";
}

std::vector<std::string> list_backends(const std::string& data_dir) {
  return list_stems(std::filesystem::path(data_dir) / "backends", ".cfg");
}

Backend load_backend(const std::string& data_dir, const std::string& name) {
  const std::filesystem::path dir =
      std::filesystem::path(data_dir) / "backends";
  const std::string stem =
      resolve_stem(list_stems(dir, ".cfg"), name, "backend");
  const std::string path = (dir / (stem + ".cfg")).string();
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open backend config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  Backend b;
  b.config = parse_backend_config(buf.str());
  b.topology = load_topology_file(
      (std::filesystem::path(data_dir) / "topologies" / b.config.topology_file)
          .string());
  return b;
}

Topology load_topology(const std::string& data_dir, const std::string& name) {
  const std::filesystem::path dir =
      std::filesystem::path(data_dir) / "topologies";
  const std::string stem =
      resolve_stem(list_stems(dir, ".topo"), name, "topology");
  return load_topology_file((dir / (stem + ".topo")).string());
}

}  // namespace quarch
