// Copyright 2026 The stabkit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stabkit/circuit.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

namespace stabkit {

Gate Gate::ry_quarter(std::uint32_t qubit, std::uint32_t k) {
  if (k > 3) {
    throw std::invalid_argument(fmt::format("quarter-turn index {} not in [0, 4)", k));
  }
  return {GateKind::kRyQuarter, qubit, k};
}

Gate Gate::cnot(std::uint32_t control, std::uint32_t target) {
  if (control == target) {
    throw std::invalid_argument("CNOT control and target must differ");
  }
  return {GateKind::kCnot, control, target};
}

void Circuit::append(const Gate &g) {
  const auto check = [this](std::uint32_t q) {
    if (q >= n_) {
      throw std::out_of_range(fmt::format("qubit {} out of range for {}-qubit circuit", q, n_));
    }
  };
  check(g.a);
  if (g.kind == GateKind::kCnot) {
    check(g.b);
  }
  gates_.push_back(g);
}

void Circuit::append(const Circuit &other) {
  if (other.num_qubits() != n_) {
    throw std::invalid_argument(fmt::format("circuit width mismatch: {} vs {}", other.num_qubits(), n_));
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
}

void dump_circuit(std::ostream &out, const Circuit &c) {
  for (const Gate &g : c.gates()) {
    switch (g.kind) {
      case GateKind::kRyQuarter:
        out << "RY " << g.a << ' ' << g.b << '\n';
        break;
      case GateKind::kCnot:
        out << "CNOT " << g.a << ' ' << g.b << '\n';
        break;
      case GateKind::kH:
        out << "H " << g.a << '\n';
        break;
      case GateKind::kS:
        out << "S " << g.a << '\n';
        break;
      case GateKind::kX:
        out << "X " << g.a << '\n';
        break;
      case GateKind::kZ:
        out << "Z " << g.a << '\n';
        break;
    }
  }
}

std::string dump_circuit(const Circuit &c) {
  std::ostringstream out;
  dump_circuit(out, c);
  return out.str();
}

}  // namespace stabkit
