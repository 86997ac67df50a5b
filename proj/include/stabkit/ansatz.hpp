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
#include <span>
#include <string>
#include <vector>

#include "stabkit/circuit.hpp"

namespace stabkit {

enum class Entanglement : std::uint8_t { kLinear, kReverseLinear };

/// Frozen wiring convention, fixed by enumerating single-layer circuits
/// against the exact closed-form probabilities:
///   Linear        = CNOT(i, i+1) for i = 0 .. n-2 (ascending),
///   ReverseLinear = the same pairs applied in descending i order.
/// The remaining variants are rejected candidates kept behind the
/// --debug-convention flag. kMirrored (control/target exchanged, order
/// reversed per structure) is the qubit-relabelled twin of kFrozen and
/// matches the same closed forms; kSwapped trades the two structures and
/// does not.
enum class ChainVariant : std::uint8_t { kFrozen, kSwapped, kMirrored, kSwappedMirrored };

/// Circuit family descriptor: each layer is one R_y column over all qubits
/// followed by one CNOT chain of n-1 gates (no chain when n == 1).
struct AnsatzSpec {
  std::size_t n_qubits = 1;
  std::size_t n_layers = 1;
  Entanglement ent = Entanglement::kReverseLinear;
};

/// Quarter-turn indices in [0, 4), length n_qubits * n_layers, qubit-major
/// within each layer (slot l*n + q drives layer l, qubit q).
using AngleVector = std::vector<std::uint8_t>;

std::size_t angle_count(const AnsatzSpec &spec);

Circuit build_ansatz_circuit(const AnsatzSpec &spec, const AngleVector &angles,
                             ChainVariant variant = ChainVariant::kFrozen);

/// Clifford data-encoding layer: one R_y per qubit with the level map
/// {0,1,2,3} -> {0, pi, pi/2, -pi/2}, i.e. quarter indices {0, 2, 1, 3}.
Circuit encode_features(std::span<const std::uint8_t> levels);

/// Encoding first, then the variational circuit.
Circuit compose(const Circuit &encoding, const Circuit &ansatz);

std::string to_string(Entanglement e);
Entanglement entanglement_from_string(std::string_view s);
std::string to_string(ChainVariant v);
ChainVariant chain_variant_from_string(std::string_view s);

/// Textual descriptor used by CLI flags: "n=<int>,layers=<int>,ent=linear|revlinear".
AnsatzSpec parse_ansatz_descriptor(std::string_view text);
std::string ansatz_descriptor(const AnsatzSpec &spec);

}  // namespace stabkit
