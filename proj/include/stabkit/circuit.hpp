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

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace stabkit {

enum class GateKind : std::uint8_t { kRyQuarter, kCnot, kH, kS, kX, kZ };

/// One Clifford gate. RyQuarter carries the quarter-turn index k in [0, 4),
/// meaning the rotation angle theta = k * pi/2 (k = 3 is -pi/2). CNOT stores
/// (control, target); the single-qubit kinds use only `a`.
struct Gate {
  GateKind kind;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  static Gate ry_quarter(std::uint32_t qubit, std::uint32_t k);
  static Gate cnot(std::uint32_t control, std::uint32_t target);
  static Gate h(std::uint32_t qubit) { return {GateKind::kH, qubit, 0}; }
  static Gate s(std::uint32_t qubit) { return {GateKind::kS, qubit, 0}; }
  static Gate x(std::uint32_t qubit) { return {GateKind::kX, qubit, 0}; }
  static Gate z(std::uint32_t qubit) { return {GateKind::kZ, qubit, 0}; }

  bool operator==(const Gate &) const = default;
};

/// Ordered gate list on a fixed qubit count.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n) : n_(n) {}

  std::size_t num_qubits() const { return n_; }
  const std::vector<Gate> &gates() const { return gates_; }
  std::vector<Gate> &mutable_gates() { return gates_; }

  /// Appends after validating qubit indices against num_qubits().
  void append(const Gate &g);
  void append(const Circuit &other);

  std::size_t size() const { return gates_.size(); }

  bool operator==(const Circuit &) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<Gate> gates_;
};

/// Debug dump, one gate per line: "RY q k", "CNOT c t", "H q", "S q", ...
std::string dump_circuit(const Circuit &c);
void dump_circuit(std::ostream &out, const Circuit &c);

}  // namespace stabkit
