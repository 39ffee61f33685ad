// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "circuit.hpp"

namespace quarch {

// Undirected connectivity graph of a device. Edges are stored normalized
// (a < b) and sorted; the graph must be connected and self-loop free.
struct Topology {
  std::string name;
  int n_qubits = 0;
  std::vector<std::pair<int, int>> edges;

  bool is_adjacent(int a, int b) const;
  int degree(int q) const;
  int max_degree() const;
  std::vector<int> neighbors(int q) const;  // ascending
};

// Throws std::invalid_argument on self-loops, out-of-range endpoints, or a
// disconnected graph.
Topology make_topology(std::string name, int n_qubits,
                       std::vector<std::pair<int, int>> edges);

// Text format, '#' comments:
//   name X
//   qubits N
//   edge a b
std::string format_topology(const Topology& g);
Topology parse_topology(const std::string& text);   // throws ParseError
Topology load_topology_file(const std::string& path);

// Minimal-length path from a to b; among equal-length paths the
// lexicographically smallest vertex sequence. pre: a != b, both in range.
std::vector<int> shortest_path(const Topology& g, int a, int b);

struct RouteResult {
  // Routed circuit over compact indices 0..k-1, where k is the number of
  // active device qubits (placement targets plus SWAP intermediaries).
  Circuit circuit;
  // Ascending device ids backing the compact indices (size k).
  std::vector<int> device_of_compact;
  // Final device position of each input logical qubit (size c.n_qubits).
  std::vector<int> final_device_of_logical;
  int swaps_inserted = 0;
};

// Greedy shortest-path SWAP insertion with a persistent mapping: for each
// non-adjacent two-qubit instruction the first operand is moved along the
// shortest path to one edge from the second (path length - 2 SWAPs).
// placement maps logical qubit -> device qubit; empty means identity.
// Throws std::invalid_argument if the circuit does not fit the topology or
// more than kMaxQubits device qubits become active.
RouteResult route(const Circuit& c, const Topology& g,
                  const std::vector<int>& placement = {});

}  // namespace quarch
