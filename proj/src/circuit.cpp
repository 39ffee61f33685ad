// Copyright 2026 The Quarch Authors
// SPDX-License-Identifier: Apache-2.0
#include "circuit.hpp"

#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "error.hpp"

namespace quarch {

namespace {

// Shortest decimal form that round-trips a double exactly.
std::string fmt_double(double v) {
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string fmt_int_list(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char delim) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == delim) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& tok, int line_no) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected integer, got '" + tok + "'");
  }
}

double parse_double(const std::string& tok, int line_no) {
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end == tok.c_str() || *end != '\0')
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected number, got '" + tok + "'");
  return v;
}

}  // namespace

Instruction make_r(int q, double theta, double phi) {
  Instruction i;
  i.kind = GateKind::R;
  i.q0 = q;
  i.theta = theta;
  i.phi = phi;
  return i;
}

Instruction make_gate1(GateKind k, int q) {
  Instruction i;
  i.kind = k;
  i.q0 = q;
  return i;
}

Instruction make_gate2(GateKind k, int a, int b, double chi) {
  Instruction i;
  i.kind = k;
  i.q0 = a;
  i.q1 = b;
  i.theta = chi;
  return i;
}

std::vector<std::string> validate(const Circuit& c) {
  std::vector<std::string> errors;
  if (c.n_qubits < 0) errors.push_back("negative qubit count");
  if (c.n_qubits > kMaxQubits)
    errors.push_back("qubit cap exceeded: " + std::to_string(c.n_qubits) +
                     " > " + std::to_string(kMaxQubits));
  if (static_cast<int>(c.initial_ones.size()) != c.n_qubits)
    errors.push_back("initial_ones size mismatch");
  for (std::size_t idx = 0; idx < c.instructions.size(); ++idx) {
    const Instruction& inst = c.instructions[idx];
    const std::string where = "instruction " + std::to_string(idx) + " (" +
                              std::string(gate_name(inst.kind)) + ")";
    const int ar = arity(inst.kind);
    if (inst.q0 < 0 || inst.q0 >= c.n_qubits)
      errors.push_back(where + ": operand out of range");
    if (ar == 2) {
      if (inst.q1 < 0 || inst.q1 >= c.n_qubits)
        errors.push_back(where + ": operand out of range");
      else if (inst.q1 == inst.q0)
        errors.push_back(where + ": duplicate operands");
    } else if (inst.q1 != -1) {
      errors.push_back(where + ": operand count mismatch");
    }
  }
  std::set<int> seen;
  for (int m : c.measured) {
    if (m < 0 || m >= c.n_qubits)
      errors.push_back("measured qubit " + std::to_string(m) +
                       " out of range");
    else if (!seen.insert(m).second)
      errors.push_back("measured qubit " + std::to_string(m) + " repeated");
  }
  return errors;
}

void require_valid(const Circuit& c) {
  const std::vector<std::string> errors = validate(c);
  if (errors.empty()) return;
  std::string msg = "invalid circuit:";
  for (const std::string& e : errors) msg += "\n  " + e;
  throw std::invalid_argument(msg);
}

int two_qubit_gate_count(const Circuit& c) {
  int count = 0;
  for (const Instruction& inst : c.instructions)
    if (arity(inst.kind) == 2) ++count;
  return count;
}

std::string format_circuit(const Circuit& c) {
  std::ostringstream out;
  out << "qubits " << c.n_qubits << '\n';
  std::vector<int> ones;
  for (int q = 0; q < c.n_qubits; ++q)
    if (c.initial_ones[static_cast<std::size_t>(q)]) ones.push_back(q);
  if (!ones.empty()) out << "ones " << fmt_int_list(ones) << '\n';
  for (const Instruction& inst : c.instructions) {
    out << gate_name(inst.kind) << ' ' << inst.q0;
    if (arity(inst.kind) == 2) out << ' ' << inst.q1;
    if (inst.kind == GateKind::R)
      out << " theta=" << fmt_double(inst.theta)
          << " phi=" << fmt_double(inst.phi);
    else if (inst.kind == GateKind::XX || inst.kind == GateKind::ZX)
      out << " chi=" << fmt_double(inst.theta);
    out << '\n';
  }
  if (!c.measured.empty()) out << "measure " << fmt_int_list(c.measured) << '\n';
  return out.str();
}

Circuit parse_circuit(const std::string& text) {
  Circuit c(0);
  bool saw_qubits = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const std::size_t hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;

    if (tok[0] == "qubits") {
      if (tok.size() != 2)
        throw ParseError("line " + std::to_string(line_no) +
                         ": qubits takes one argument");
      c = Circuit(parse_int(tok[1], line_no));
      saw_qubits = true;
      continue;
    }
    if (!saw_qubits)
      throw ParseError("line " + std::to_string(line_no) +
                       ": 'qubits N' must come first");
    if (tok[0] == "ones" || tok[0] == "measure") {
      if (tok.size() != 2)
        throw ParseError("line " + std::to_string(line_no) + ": " + tok[0] +
                         " takes one comma-separated list");
      for (const std::string& part : split(tok[1], ',')) {
        const int q = parse_int(part, line_no);
        if (q < 0 || q >= c.n_qubits)
          throw ParseError("line " + std::to_string(line_no) + ": qubit " +
                           part + " out of range");
        if (tok[0] == "ones")
          c.initial_ones[static_cast<std::size_t>(q)] = true;
        else
          c.measured.push_back(q);
      }
      continue;
    }

    const std::optional<GateKind> kind = parse_gate_name(tok[0]);
    if (!kind)
      throw ParseError("line " + std::to_string(line_no) + ": unknown gate '" +
                       tok[0] + "'");
    Instruction inst;
    inst.kind = *kind;
    const int ar = arity(*kind);
    std::size_t next = 1;
    if (tok.size() < next + static_cast<std::size_t>(ar))
      throw ParseError("line " + std::to_string(line_no) +
                       ": missing operands");
    inst.q0 = parse_int(tok[next++], line_no);
    if (ar == 2) inst.q1 = parse_int(tok[next++], line_no);
    bool have_theta = false, have_phi = false, have_chi = false;
    for (; next < tok.size(); ++next) {
      const std::size_t eq = tok[next].find('=');
      if (eq == std::string::npos)
        throw ParseError("line " + std::to_string(line_no) +
                         ": expected name=value, got '" + tok[next] + "'");
      const std::string name = tok[next].substr(0, eq);
      const double value = parse_double(tok[next].substr(eq + 1), line_no);
      if (name == "theta" && inst.kind == GateKind::R) {
        inst.theta = value;
        have_theta = true;
      } else if (name == "phi" && inst.kind == GateKind::R) {
        inst.phi = value;
        have_phi = true;
      } else if (name == "chi" && (inst.kind == GateKind::XX ||
                                   inst.kind == GateKind::ZX)) {
        inst.theta = value;
        have_chi = true;
      } else {
        throw ParseError("line " + std::to_string(line_no) +
                         ": unexpected parameter '" + name + "' for " +
                         tok[0]);
      }
    }
    if (inst.kind == GateKind::R && !(have_theta && have_phi))
      throw ParseError("line " + std::to_string(line_no) +
                       ": R requires theta= and phi=");
    if ((inst.kind == GateKind::XX || inst.kind == GateKind::ZX) && !have_chi)
      throw ParseError("line " + std::to_string(line_no) +
                       ": " + tok[0] + " requires chi=");
    c.add(inst);
  }
  if (!saw_qubits) throw ParseError("missing 'qubits N' header");
  return c;
}

}  // namespace quarch
