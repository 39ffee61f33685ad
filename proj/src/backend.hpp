// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "noise.hpp"
#include "topology.hpp"
#include "transpiler.hpp"

namespace quarch {

// One backend preset: topology + native gate family + noise parameters.
// Serialized as a flat key-value file with one [section] per component:
//   [backend] name/topology/native_set, then [spam], [depol], [coherent],
//   [crosstalk] with the fields of the corresponding noise model.
struct BackendConfig {
  std::string name;
  std::string topology_file;  // relative to the data dir's topologies/
  NativeSet native = NativeSet::CZ;
  NoiseProfile profile;
};

std::string format_backend_config(const BackendConfig& cfg);
BackendConfig parse_backend_config(const std::string& text);  // ParseError

// A loaded backend ready to run on.
struct Backend {
  BackendConfig config;
  Topology topology;
};

// Resolution order for the data directory: explicit argument, else the
// QUARCH_DATA_DIR environment variable, else "./data".
std::string resolve_data_dir(const std::string& explicit_dir);

// Stems of the *.cfg files under <data_dir>/backends, sorted.
std::vector<std::string> list_backends(const std::string& data_dir);

// Loads <data_dir>/backends/<name>.cfg (exact stem, or unique stem prefix:
// "ionq" resolves ionq-11). Throws std::invalid_argument("unknown backend
// ...") when nothing or more than one preset matches.
Backend load_backend(const std::string& data_dir, const std::string& name);

// Loads <data_dir>/topologies/<name>.topo with the same prefix rule.
Topology load_topology(const std::string& data_dir, const std::string& name);

}  // namespace quarch
