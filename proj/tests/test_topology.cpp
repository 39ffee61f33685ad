// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "error.hpp"
#include "gates.hpp"
#include "statevector.hpp"
#include "topology.hpp"

using namespace quarch;

namespace {

std::string data_dir() {
  const char* env = std::getenv("QUARCH_DATA_DIR");
  REQUIRE(env != nullptr);
  return std::string(env);
}

Topology load_preset(const std::string& stem) {
  return load_topology_file(data_dir() + "/topologies/" + stem + ".topo");
}

Topology line5() {
  return make_topology("line5", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
}

// Every two-qubit instruction must touch an edge of g once mapped back to
// device indices.
void check_routed_adjacency(const RouteResult& r, const Topology& g) {
  for (const Instruction& inst : r.circuit.instructions) {
    if (arity(inst.kind) != 2) continue;
    const int da = r.device_of_compact[static_cast<std::size_t>(inst.q0)];
    const int db = r.device_of_compact[static_cast<std::size_t>(inst.q1)];
    CAPTURE(da);
    CAPTURE(db);
    CHECK(g.is_adjacent(da, db));
  }
}

}  // namespace

TEST_CASE("make_topology validates and normalizes") {
  const Topology g = make_topology("t", 3, {{2, 1}, {0, 1}, {1, 2}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(g.is_adjacent(1, 0));
  CHECK(g.is_adjacent(2, 1));
  CHECK_FALSE(g.is_adjacent(0, 2));
  CHECK_FALSE(g.is_adjacent(0, 0));
  CHECK_THROWS_AS(g.is_adjacent(0, 3), std::out_of_range);

  CHECK_THROWS_AS(make_topology("t", 3, {{0, 0}, {0, 1}, {1, 2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_topology("t", 3, {{0, 1}, {1, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_topology("t", 4, {{0, 1}, {2, 3}}),
                  std::invalid_argument);  // disconnected
  CHECK_THROWS_AS(make_topology("t", 0, {}), std::invalid_argument);
}

TEST_CASE("degree bookkeeping") {
  const Topology g = line5();
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(2) == 2);
  CHECK(g.max_degree() == 2);
  CHECK(g.neighbors(2) == std::vector<int>{1, 3});
  CHECK(g.neighbors(0) == std::vector<int>{1});
}

TEST_CASE("topology text format round-trips") {
  const Topology g = line5();
  const std::string text = format_topology(g);
  const Topology back = parse_topology(text);
  CHECK(back.name == g.name);
  CHECK(back.n_qubits == g.n_qubits);
  CHECK(back.edges == g.edges);

  CHECK_NOTHROW(parse_topology("# comment\nname x\nqubits 2\n\nedge 0 1\n"));
  CHECK_THROWS_AS(parse_topology("name x\nqubits 2\nedge 0 1 junk\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_topology("name x\nqubits 2\nedge 0 two\n"),
                  ParseError);
  CHECK_THROWS_AS(parse_topology("name x\nedge 0 1\n"), ParseError);
}

TEST_CASE("bundled device graphs have the advertised shape") {
  const Topology ionq = load_preset("ionq-11");
  CHECK(ionq.n_qubits == 11);
  CHECK(ionq.edges.size() == 55);  // complete graph
  CHECK(ionq.max_degree() == 10);

  const Topology vigo = load_preset("ibm-vigo-5");
  CHECK(vigo.n_qubits == 5);
  CHECK(vigo.edges.size() == 4);
  CHECK(vigo.max_degree() == 3);
  CHECK(vigo.degree(1) == 3);  // the T-junction center

  const Topology melbourne = load_preset("ibm-melbourne-15");
  CHECK(melbourne.n_qubits == 15);
  CHECK(melbourne.edges.size() == 20);
  CHECK(melbourne.max_degree() == 3);

  const Topology aspen = load_preset("rigetti-aspen8-31");
  CHECK(aspen.n_qubits == 31);
  CHECK(aspen.edges.size() == 36);
  CHECK(aspen.max_degree() == 3);
  for (const Topology* g : {&ionq, &vigo, &melbourne, &aspen}) {
    int degree_sum = 0;
    for (int q = 0; q < g->n_qubits; ++q) degree_sum += g->degree(q);
    CHECK(degree_sum == 2 * static_cast<int>(g->edges.size()));
  }
}

TEST_CASE("shortest_path finds minimal, lexicographically smallest paths") {
  const Topology g = line5();
  CHECK(shortest_path(g, 0, 3) == std::vector<int>{0, 1, 2, 3});
  CHECK(shortest_path(g, 3, 0) == std::vector<int>{3, 2, 1, 0});
  CHECK(shortest_path(g, 1, 2) == std::vector<int>{1, 2});

  // A 4-cycle has two equal-length routes; the smaller vertex wins.
  const Topology cyc = make_topology("c4", 4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(shortest_path(cyc, 1, 3) == std::vector<int>{1, 0, 3});

  const Topology vigo = load_preset("ibm-vigo-5");
  CHECK(shortest_path(vigo, 0, 4) == std::vector<int>{0, 1, 3, 4});
  CHECK(shortest_path(vigo, 2, 4) == std::vector<int>{2, 1, 3, 4});
}

TEST_CASE("route leaves adjacent circuits untouched") {
  const Topology g = line5();
  Circuit c(3);
  c.add(make_gate1(GateKind::H, 0));
  c.add(make_gate2(GateKind::CNOT, 0, 1));
  c.add(make_gate2(GateKind::CNOT, 1, 2));
  c.measured = {0, 1, 2};
  const RouteResult r = route(c, g);
  CHECK(r.swaps_inserted == 0);
  CHECK(r.circuit.instructions.size() == c.instructions.size());
  CHECK(r.device_of_compact == std::vector<int>{0, 1, 2});
  CHECK(r.final_device_of_logical == std::vector<int>{0, 1, 2});
  check_routed_adjacency(r, g);
}

TEST_CASE("route inserts path-length-minus-two swaps") {
  const Topology g = line5();
  Circuit c(5);
  // Distance 4: logical 0 walks three hops to device 3, one edge from 4.
  c.add(make_gate2(GateKind::CNOT, 0, 4));
  c.measured = {0, 4};
  const RouteResult r = route(c, g);
  CHECK(r.swaps_inserted == 3);
  int swaps = 0, cnots = 0;
  for (const Instruction& inst : r.circuit.instructions) {
    if (inst.kind == GateKind::SWAP) ++swaps;
    if (inst.kind == GateKind::CNOT) ++cnots;
  }
  CHECK(swaps == 3);
  CHECK(cnots == 1);
  check_routed_adjacency(r, g);
  // Logical 0 walked down the line to sit next to logical 4.
  CHECK(r.final_device_of_logical[0] == 3);
  CHECK(r.final_device_of_logical[4] == 4);
}

TEST_CASE("route on a complete graph never swaps") {
  const Topology ionq = load_preset("ionq-11");
  std::mt19937_64 rng(0xabcULL);
  Circuit c(11);
  for (int i = 0; i < 40; ++i) {
    const int a = static_cast<int>(rng() % 11);
    int b = static_cast<int>(rng() % 11);
    while (b == a) b = static_cast<int>(rng() % 11);
    c.add(make_gate2(GateKind::CNOT, a, b));
  }
  const RouteResult r = route(c, ionq);
  CHECK(r.swaps_inserted == 0);
  CHECK(r.circuit.instructions.size() == c.instructions.size());
}

TEST_CASE("route preserves the measured distribution") {
  const Topology vigo = load_preset("ibm-vigo-5");
  std::mt19937_64 rng(0x5a5a5aULL);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    CAPTURE(trial);
    Circuit c(4);
    for (int i = 0; i < 12; ++i) {
      if (rng() % 2 == 0) {
        c.add(make_r(static_cast<int>(rng() % 4), angle(rng), angle(rng)));
      } else {
        const int a = static_cast<int>(rng() % 4);
        int b = static_cast<int>(rng() % 4);
        while (b == a) b = static_cast<int>(rng() % 4);
        c.add(make_gate2(rng() % 2 ? GateKind::CNOT : GateKind::CZ, a, b));
      }
    }
    c.measured = {0, 1, 2, 3};
    const RouteResult r = route(c, vigo);
    check_routed_adjacency(r, vigo);

    // Measure the same logical qubits through their final device slots.
    const std::vector<double> want = run_ideal(c).marginal_probs(c.measured);
    const std::vector<double> got =
        run_ideal(r.circuit).marginal_probs(r.circuit.measured);
    REQUIRE(want.size() == got.size());
    for (std::size_t i = 0; i < want.size(); ++i) {
      CAPTURE(i);
      CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-9));
    }
  }
}

TEST_CASE("route honors an explicit placement") {
  const Topology vigo = load_preset("ibm-vigo-5");
  Circuit c(2);
  c.add(make_gate2(GateKind::CNOT, 0, 1));
  c.measured = {0, 1};
  // Logical 0 -> device 3, logical 1 -> device 0: distance 2 -> 1 SWAP.
  const RouteResult r = route(c, vigo, {3, 0});
  CHECK(r.swaps_inserted == 1);
  CHECK(r.final_device_of_logical[0] == 1);
  CHECK(r.final_device_of_logical[1] == 0);
  check_routed_adjacency(r, vigo);

  CHECK_THROWS_AS(route(c, vigo, {4, 4}), std::invalid_argument);  // collision
  CHECK_THROWS_AS(route(c, vigo, {0, 5}), std::invalid_argument);  // range
  CHECK_THROWS_AS(route(c, vigo, {0}), std::invalid_argument);     // size
}

TEST_CASE("route compacts device indices and reports the backing ids") {
  const Topology vigo = load_preset("ibm-vigo-5");
  Circuit c(2);
  c.add(make_gate2(GateKind::CNOT, 0, 1));
  c.measured = {0, 1};
  const RouteResult r = route(c, vigo, {3, 4});
  CHECK(r.swaps_inserted == 0);
  CHECK(r.circuit.n_qubits == 2);
  CHECK(r.device_of_compact == std::vector<int>{3, 4});
  CHECK(std::is_sorted(r.device_of_compact.begin(),
                       r.device_of_compact.end()));
  check_routed_adjacency(r, vigo);
}

TEST_CASE("route rejects circuits larger than the device") {
  const Topology g = line5();
  Circuit c(6);
  c.add(make_gate2(GateKind::CNOT, 0, 5));
  CHECK_THROWS_AS(route(c, g), std::invalid_argument);
}
