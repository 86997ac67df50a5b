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

#include "stabkit/circuit.hpp"
#include "stabkit/pauli.hpp"

namespace stabkit {

/// In-place g p g^dagger; touches only the words holding the gate's qubits.
void conjugate_gate_inplace(PauliString &p, const Gate &g);

/// g p g^dagger as a new string.
PauliString conjugate_gate(const PauliString &p, const Gate &g);

/// In-place g^dagger p g, the adjoint action used when an observable is
/// pulled backward through a circuit.
void conjugate_gate_adjoint_inplace(PauliString &p, const Gate &g);

/// <0...0| C^dagger P C |0...0> for a Clifford circuit C and Hermitian P,
/// always one of {-1, 0, +1}. Conjugates P backward through the gate list
/// (last gate first) and reads the result off the all-zeros state. Cost is
/// O(gates + n/64 words); no state vector is ever formed.
int expectation_heisenberg(const Circuit &c, const PauliString &p);

/// Scratch-buffer variant for hot loops; `scratch` must have matching n.
int expectation_heisenberg(const Circuit &c, const PauliString &p, PauliString &scratch);

/// Stabilizer generator matrix for a pure stabilizer state: n commuting,
/// independent, Hermitian rows with sign +1/-1. Starts at |0...0> (rows Z_q).
class StabilizerTableau {
 public:
  explicit StabilizerTableau(std::size_t n);

  std::size_t num_qubits() const { return n_; }
  const std::vector<PauliString> &rows() const { return rows_; }

  /// Conjugates every generator by g (state evolution |psi> -> g|psi>).
  void apply_gate(const Gate &g);
  void apply_circuit(const Circuit &c);

  /// Checks mutual commutation, symplectic rank n and Hermitian signs.
  bool is_valid() const;

 private:
  std::size_t n_;
  std::vector<PauliString> rows_;
};

/// Tableau from running c on |0...0>.
StabilizerTableau tableau_from_circuit(const Circuit &c);

/// <psi|P|psi> for the stabilizer state: 0 when P anticommutes with any
/// generator, otherwise the sign resolved by expressing P as a product of
/// generators over GF(2).
int expectation_tableau(const StabilizerTableau &t, const PauliString &p);

}  // namespace stabkit
