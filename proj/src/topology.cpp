// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "topology.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "error.hpp"

namespace quarch {

bool Topology::is_adjacent(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_qubits || b >= n_qubits)
    throw std::out_of_range("qubit index out of range for topology '" + name +
                            "'");
  if (a == b) return false;
  const auto e = std::minmax(a, b);
  return std::binary_search(edges.begin(), edges.end(),
                            std::make_pair(e.first, e.second));
}

int Topology::degree(int q) const {
  if (q < 0 || q >= n_qubits)
    throw std::out_of_range("qubit index out of range for topology '" + name +
                            "'");
  int d = 0;
  for (const auto& [a, b] : edges)
    if (a == q || b == q) ++d;
  return d;
}

int Topology::max_degree() const {
  int best = 0;
  for (int q = 0; q < n_qubits; ++q) best = std::max(best, degree(q));
  return best;
}

std::vector<int> Topology::neighbors(int q) const {
  if (q < 0 || q >= n_qubits)
    throw std::out_of_range("qubit index out of range for topology '" + name +
                            "'");
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == q) out.push_back(b);
    if (b == q) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Topology make_topology(std::string name, int n_qubits,
                       std::vector<std::pair<int, int>> edges) {
  if (n_qubits < 1)
    throw std::invalid_argument("topology needs at least one qubit");
  for (auto& [a, b] : edges) {
    if (a == b)
      throw std::invalid_argument("topology '" + name + "' has a self-loop");
    if (a < 0 || b < 0 || a >= n_qubits || b >= n_qubits)
      throw std::invalid_argument("topology '" + name +
                                  "' has an out-of-range edge endpoint");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Topology g{std::move(name), n_qubits, std::move(edges)};

  // Connectivity check (single BFS from 0).
  std::vector<bool> seen(static_cast<std::size_t>(n_qubits), false);
  std::deque<int> frontier{0};
  seen[0] = true;
  int reached = 1;
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop_front();
    for (int nb : g.neighbors(cur)) {
      if (!seen[static_cast<std::size_t>(nb)]) {
        seen[static_cast<std::size_t>(nb)] = true;
        ++reached;
        frontier.push_back(nb);
      }
    }
  }
  if (reached != n_qubits)
    throw std::invalid_argument("topology '" + g.name + "' is not connected");
  return g;
}

std::string format_topology(const Topology& g) {
  std::ostringstream out;
  out << "name " << g.name << "\n";
  out << "qubits " << g.n_qubits << "\n";
  for (const auto& [a, b] : g.edges) out << "edge " << a << " " << b << "\n";
  return out.str();
}

Topology parse_topology(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string name;
  int n_qubits = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  bool saw_name = false;

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    const auto fail = [&](const std::string& why) -> ParseError {
      return ParseError("topology line " + std::to_string(line_no) + ": " +
                        why);
    };
    if (word == "name") {
      if (!(ls >> name)) throw fail("expected a name");
      saw_name = true;
    } else if (word == "qubits") {
      if (!(ls >> n_qubits) || n_qubits < 1)
        throw fail("expected a positive qubit count");
    } else if (word == "edge") {
      int a = 0, b = 0;
      if (!(ls >> a >> b)) throw fail("expected two endpoints");
      if (n_qubits < 0) throw fail("edge before qubits line");
      edges.emplace_back(a, b);
    } else {
      throw fail("unknown directive '" + word + "'");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing token '" + extra + "'");
  }
  if (!saw_name) throw ParseError("topology: missing name line");
  if (n_qubits < 0) throw ParseError("topology: missing qubits line");
  try {
    return make_topology(std::move(name), n_qubits, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Topology load_topology_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open topology file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_topology(buf.str());
}

std::vector<int> shortest_path(const Topology& g, int a, int b) {
  if (a == b) throw std::invalid_argument("shortest_path endpoints coincide");
  if (a < 0 || b < 0 || a >= g.n_qubits || b >= g.n_qubits)
    throw std::out_of_range("qubit index out of range for topology '" +
                            g.name + "'");

  // Distance-to-target from a reverse BFS, then a greedy walk from the
  // source taking the smallest-index neighbor that stays on a shortest
  // path. Greedy-smallest at each step is exactly the lexicographically
  // smallest shortest vertex sequence.
  constexpr int kUnreached = -1;
  std::vector<int> dist(static_cast<std::size_t>(g.n_qubits), kUnreached);
  std::deque<int> frontier{b};
  dist[static_cast<std::size_t>(b)] = 0;
  while (!frontier.empty()) {
    const int cur = frontier.front();
    frontier.pop_front();
    for (int nb : g.neighbors(cur)) {
      if (dist[static_cast<std::size_t>(nb)] == kUnreached) {
        dist[static_cast<std::size_t>(nb)] =
            dist[static_cast<std::size_t>(cur)] + 1;
        frontier.push_back(nb);
      }
    }
  }

  std::vector<int> path{a};
  int cur = a;
  while (cur != b) {
    const int want = dist[static_cast<std::size_t>(cur)] - 1;
    int next = -1;
    for (int nb : g.neighbors(cur)) {  // ascending: first hit is smallest
      if (dist[static_cast<std::size_t>(nb)] == want) {
        next = nb;
        break;
      }
    }
    path.push_back(next);
    cur = next;
  }
  return path;
}

RouteResult route(const Circuit& c, const Topology& g,
                  const std::vector<int>& placement) {
  require_valid(c);
  if (c.n_qubits > g.n_qubits)
    throw std::invalid_argument("circuit larger than topology '" + g.name +
                                "'");

  std::vector<int> place = placement;
  if (place.empty()) {
    place.resize(static_cast<std::size_t>(c.n_qubits));
    for (int q = 0; q < c.n_qubits; ++q)
      place[static_cast<std::size_t>(q)] = q;
  }
  if (static_cast<int>(place.size()) != c.n_qubits)
    throw std::invalid_argument("placement size mismatch");
  std::vector<int> occupant(static_cast<std::size_t>(g.n_qubits), -1);
  for (int l = 0; l < c.n_qubits; ++l) {
    const int d = place[static_cast<std::size_t>(l)];
    if (d < 0 || d >= g.n_qubits)
      throw std::invalid_argument("placement target out of range");
    if (occupant[static_cast<std::size_t>(d)] != -1)
      throw std::invalid_argument("placement is not injective");
    occupant[static_cast<std::size_t>(d)] = l;
  }

  std::vector<int> pos = place;  // logical -> device
  std::vector<Instruction> device_insts;
  int swaps = 0;

  const auto swap_occupants = [&](int da, int db) {
    const int la = occupant[static_cast<std::size_t>(da)];
    const int lb = occupant[static_cast<std::size_t>(db)];
    occupant[static_cast<std::size_t>(da)] = lb;
    occupant[static_cast<std::size_t>(db)] = la;
    if (la != -1) pos[static_cast<std::size_t>(la)] = db;
    if (lb != -1) pos[static_cast<std::size_t>(lb)] = da;
  };

  for (const Instruction& inst : c.instructions) {
    Instruction d = inst;
    d.q0 = pos[static_cast<std::size_t>(inst.q0)];
    if (arity(inst.kind) == 1) {
      device_insts.push_back(d);
      continue;
    }
    int db = pos[static_cast<std::size_t>(inst.q1)];
    if (!g.is_adjacent(d.q0, db)) {
      const std::vector<int> path = shortest_path(g, d.q0, db);
      for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        device_insts.push_back(
            make_gate2(GateKind::SWAP, path[i], path[i + 1]));
        swap_occupants(path[i], path[i + 1]);
        ++swaps;
      }
      d.q0 = pos[static_cast<std::size_t>(inst.q0)];
      db = pos[static_cast<std::size_t>(inst.q1)];
    }
    d.q1 = db;
    device_insts.push_back(d);
  }

  // Compact to the active device qubits, ascending.
  std::vector<bool> active(static_cast<std::size_t>(g.n_qubits), false);
  for (int d : place) active[static_cast<std::size_t>(d)] = true;
  for (const Instruction& inst : device_insts) {
    active[static_cast<std::size_t>(inst.q0)] = true;
    if (arity(inst.kind) == 2) active[static_cast<std::size_t>(inst.q1)] = true;
  }
  std::vector<int> device_of_compact;
  std::vector<int> compact_of_device(static_cast<std::size_t>(g.n_qubits), -1);
  for (int d = 0; d < g.n_qubits; ++d) {
    if (active[static_cast<std::size_t>(d)]) {
      compact_of_device[static_cast<std::size_t>(d)] =
          static_cast<int>(device_of_compact.size());
      device_of_compact.push_back(d);
    }
  }
  if (static_cast<int>(device_of_compact.size()) > kMaxQubits)
    throw std::invalid_argument(
        "routing activated more device qubits than the simulator cap");

  RouteResult r;
  r.circuit = Circuit(static_cast<int>(device_of_compact.size()));
  for (Instruction inst : device_insts) {
    inst.q0 = compact_of_device[static_cast<std::size_t>(inst.q0)];
    if (arity(inst.kind) == 2)
      inst.q1 = compact_of_device[static_cast<std::size_t>(inst.q1)];
    r.circuit.add(inst);
  }
  for (int l = 0; l < c.n_qubits; ++l)
    if (c.initial_ones[static_cast<std::size_t>(l)])
      r.circuit.initial_ones[static_cast<std::size_t>(
          compact_of_device[static_cast<std::size_t>(
              place[static_cast<std::size_t>(l)])])] = true;
  for (int lq : c.measured)
    r.circuit.measured.push_back(
        compact_of_device[static_cast<std::size_t>(
            pos[static_cast<std::size_t>(lq)])]);
  r.device_of_compact = std::move(device_of_compact);
  r.final_device_of_logical = std::move(pos);
  r.swaps_inserted = swaps;
  return r;
}

}  // namespace quarch
