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

#include <cstdint>
#include <random>

#include "stabkit/circuit.hpp"
#include "stabkit/pauli.hpp"

namespace stabkit {

/// Random circuit over the supported Clifford gate set (quarter-turn R_y,
/// CNOT, H, S, X, Z).
Circuit random_clifford_circuit(std::size_t n, std::size_t n_gates, std::mt19937_64 &rng);

/// Random Hermitian observable with letters drawn from {X, Z} and a random
/// overall sign.
PauliString random_xz_observable(std::size_t n, std::mt19937_64 &rng);

struct ValidationStats {
  std::uint64_t circuits = 0;
  std::uint64_t path_mismatches = 0;   // Heisenberg vs tableau
  std::uint64_t dense_mismatches = 0;  // stabilizer paths vs dense oracle
  std::uint64_t non_integral = 0;      // dense value further than 1e-9 from {-1,0,1}

  bool ok() const { return path_mismatches == 0 && dense_mismatches == 0 && non_integral == 0; }
};

/// Cross-checks expectation_heisenberg, expectation_tableau and the dense
/// oracle on random circuits with up to max_qubits (capped at the dense
/// limit) and random X/Z observables.
ValidationStats validate_oracle_agreement(std::size_t n_circuits, std::size_t max_qubits,
                                          std::size_t gates_per_circuit, std::uint64_t seed);

}  // namespace stabkit
