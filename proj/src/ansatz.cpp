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

#include "stabkit/ansatz.hpp"

#include <stdexcept>

#include <fmt/format.h>

namespace stabkit {

std::size_t angle_count(const AnsatzSpec &spec) { return spec.n_qubits * spec.n_layers; }

namespace {

void append_chain(Circuit &c, std::size_t n, Entanglement ent, ChainVariant variant) {
  if (n < 2) {
    return;
  }
  bool descending = ent == Entanglement::kReverseLinear;
  bool flip_direction = false;
  switch (variant) {
    case ChainVariant::kFrozen:
      break;
    case ChainVariant::kSwapped:
      descending = !descending;
      break;
    case ChainVariant::kMirrored:
      descending = !descending;
      flip_direction = true;
      break;
    case ChainVariant::kSwappedMirrored:
      flip_direction = true;
      break;
  }
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t i = descending ? n - 2 - j : j;
    const auto lo = static_cast<std::uint32_t>(i);
    const auto hi = static_cast<std::uint32_t>(i + 1);
    c.append(flip_direction ? Gate::cnot(hi, lo) : Gate::cnot(lo, hi));
  }
}

}  // namespace

Circuit build_ansatz_circuit(const AnsatzSpec &spec, const AngleVector &angles,
                             ChainVariant variant) {
  if (spec.n_qubits < 1 || spec.n_layers < 1) {
    throw std::invalid_argument("ansatz needs n_qubits >= 1 and n_layers >= 1");
  }
  if (angles.size() != angle_count(spec)) {
    throw std::invalid_argument(fmt::format("angle vector length {} != n_qubits*n_layers = {}",
                                            angles.size(), angle_count(spec)));
  }
  Circuit c(spec.n_qubits);
  for (std::size_t layer = 0; layer < spec.n_layers; ++layer) {
    for (std::size_t q = 0; q < spec.n_qubits; ++q) {
      c.append(Gate::ry_quarter(static_cast<std::uint32_t>(q), angles[layer * spec.n_qubits + q]));
    }
    append_chain(c, spec.n_qubits, spec.ent, variant);
  }
  return c;
}

Circuit encode_features(std::span<const std::uint8_t> levels) {
  if (levels.empty()) {
    throw std::invalid_argument("empty feature level sequence");
  }
  // Level l -> angle {0, pi, pi/2, -pi/2}[l] -> quarter index.
  static constexpr std::uint8_t kLevelToQuarter[4] = {0, 2, 1, 3};
  Circuit c(levels.size());
  for (std::size_t q = 0; q < levels.size(); ++q) {
    if (levels[q] > 3) {
      throw std::invalid_argument(fmt::format("feature level {} not in [0, 4)", levels[q]));
    }
    c.append(Gate::ry_quarter(static_cast<std::uint32_t>(q), kLevelToQuarter[levels[q]]));
  }
  return c;
}

Circuit compose(const Circuit &encoding, const Circuit &ansatz) {
  if (encoding.num_qubits() != ansatz.num_qubits()) {
    throw std::invalid_argument(fmt::format("width mismatch: encoding {} vs ansatz {}",
                                            encoding.num_qubits(), ansatz.num_qubits()));
  }
  Circuit c = encoding;
  c.append(ansatz);
  return c;
}

std::string to_string(Entanglement e) {
  return e == Entanglement::kLinear ? "linear" : "revlinear";
}

Entanglement entanglement_from_string(std::string_view s) {
  if (s == "linear") return Entanglement::kLinear;
  if (s == "revlinear" || s == "reverse-linear" || s == "reverse_linear") {
    return Entanglement::kReverseLinear;
  }
  throw std::invalid_argument(fmt::format("unknown entanglement '{}'", s));
}

std::string to_string(ChainVariant v) {
  switch (v) {
    case ChainVariant::kFrozen: return "frozen";
    case ChainVariant::kSwapped: return "swapped";
    case ChainVariant::kMirrored: return "mirrored";
    case ChainVariant::kSwappedMirrored: return "swapped-mirrored";
  }
  return "?";
}

ChainVariant chain_variant_from_string(std::string_view s) {
  if (s == "frozen") return ChainVariant::kFrozen;
  if (s == "swapped") return ChainVariant::kSwapped;
  if (s == "mirrored") return ChainVariant::kMirrored;
  if (s == "swapped-mirrored") return ChainVariant::kSwappedMirrored;
  throw std::invalid_argument(fmt::format("unknown chain variant '{}'", s));
}

AnsatzSpec parse_ansatz_descriptor(std::string_view text) {
  AnsatzSpec spec;
  bool have_n = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    const auto item = text.substr(pos, comma - pos);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument(fmt::format("bad ansatz descriptor item '{}'", item));
    }
    const auto key = item.substr(0, eq);
    const auto value = std::string(item.substr(eq + 1));
    if (key == "n") {
      spec.n_qubits = std::stoul(value);
      have_n = true;
    } else if (key == "layers") {
      spec.n_layers = std::stoul(value);
    } else if (key == "ent") {
      spec.ent = entanglement_from_string(value);
    } else {
      throw std::invalid_argument(fmt::format("unknown ansatz descriptor key '{}'", key));
    }
    pos = comma + 1;
  }
  if (!have_n) {
    throw std::invalid_argument("ansatz descriptor must set n=<int>");
  }
  return spec;
}

std::string ansatz_descriptor(const AnsatzSpec &spec) {
  return fmt::format("n={},layers={},ent={}", spec.n_qubits, spec.n_layers, to_string(spec.ent));
}

}  // namespace stabkit
