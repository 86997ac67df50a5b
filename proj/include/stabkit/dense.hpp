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

#include <complex>
#include <vector>

#include "stabkit/circuit.hpp"
#include "stabkit/pauli.hpp"

namespace stabkit {

/// Hard cap for the brute-force path; it exists only to verify the
/// stabilizer engines and must never appear on a hot path.
inline constexpr std::size_t kDenseMaxQubits = 12;

/// Full 2^n state vector. Qubit q is bit q of the amplitude index.
struct StateVector {
  std::size_t n = 0;
  std::vector<std::complex<double>> amps;

  double norm() const;
};

StateVector zero_state(std::size_t n);

/// Applies one gate numerically. RyQuarter is applied through its angle
/// theta = k*pi/2 with the matrix [[cos t/2, -sin t/2], [sin t/2, cos t/2]],
/// keeping this path free of any Pauli-propagation shortcut.
void apply_gate_dense(StateVector &s, const Gate &g);

/// Generic-angle R_y, used by tests probing non-quarter angles.
void apply_ry_dense(StateVector &s, std::size_t qubit, double theta);

/// Runs c on |0...0>; throws for n > kDenseMaxQubits.
StateVector simulate_dense(const Circuit &c);

/// <s|P|s> as a complex number.
std::complex<double> expectation_dense_complex(const StateVector &s, const PauliString &p);

/// Real part of <s|P|s>; the imaginary part vanishes for Hermitian P.
double expectation_dense(const StateVector &s, const PauliString &p);

}  // namespace stabkit
