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

#include "stabkit/validate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "stabkit/clifford.hpp"
#include "stabkit/dense.hpp"
#include "stabkit/parallel.hpp"
#include "stabkit/rng.hpp"

namespace stabkit {

Circuit random_clifford_circuit(std::size_t n, std::size_t n_gates, std::mt19937_64 &rng) {
  Circuit c(n);
  for (std::size_t i = 0; i < n_gates; ++i) {
    // Weighted towards the ansatz gate set; the rest keep the S/H/X/Z
    // conjugation rules exercised.
    const auto roll = uniform_below(rng, 10);
    if (roll < 4) {
      c.append(Gate::ry_quarter(static_cast<std::uint32_t>(uniform_below(rng, n)),
                                static_cast<std::uint32_t>(uniform_below(rng, 4))));
    } else if (roll < 7 && n >= 2) {
      const auto a = static_cast<std::uint32_t>(uniform_below(rng, n));
      auto b = static_cast<std::uint32_t>(uniform_below(rng, n - 1));
      if (b >= a) ++b;
      c.append(Gate::cnot(a, b));
    } else if (roll < 8) {
      c.append(Gate::h(static_cast<std::uint32_t>(uniform_below(rng, n))));
    } else if (roll < 9) {
      c.append(Gate::s(static_cast<std::uint32_t>(uniform_below(rng, n))));
    } else if (roll == 9 && (rng() & 1)) {
      c.append(Gate::x(static_cast<std::uint32_t>(uniform_below(rng, n))));
    } else {
      c.append(Gate::z(static_cast<std::uint32_t>(uniform_below(rng, n))));
    }
  }
  return c;
}

PauliString random_xz_observable(std::size_t n, std::mt19937_64 &rng) {
  std::string letters(n, 'I');
  for (auto &ch : letters) {
    ch = (rng() & 1) ? 'X' : 'Z';
  }
  return PauliString::from_letters(letters, (rng() & 1) ? +1 : -1);
}

ValidationStats validate_oracle_agreement(std::size_t n_circuits, std::size_t max_qubits,
                                          std::size_t gates_per_circuit, std::uint64_t seed) {
  if (max_qubits < 1 || max_qubits > kDenseMaxQubits) {
    throw std::invalid_argument("max_qubits must be in [1, 12] for the dense cross-check");
  }
  std::vector<ValidationStats> partial(par::thread_count());
  par::for_chunks(n_circuits, 8, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    ValidationStats local;
    for (std::size_t i = begin; i < end; ++i) {
      auto rng = make_rng(seed, stream::kValidate, i);
      const std::size_t n = 1 + uniform_below(rng, max_qubits);
      const Circuit c = random_clifford_circuit(n, gates_per_circuit, rng);
      const PauliString obs = random_xz_observable(n, rng);

      const int h = expectation_heisenberg(c, obs);
      const int t = expectation_tableau(tableau_from_circuit(c), obs);
      const double d = expectation_dense(simulate_dense(c), obs);
      const double rounded = std::round(d);

      ++local.circuits;
      if (h != t) {
        ++local.path_mismatches;
      }
      if (std::abs(d - rounded) > 1e-9 || std::abs(rounded) > 1.5) {
        ++local.non_integral;
      } else if (static_cast<int>(rounded) != h) {
        ++local.dense_mismatches;
      }
    }
    partial[chunk] = local;
  });

  ValidationStats stats;
  for (const auto &p : partial) {
    stats.circuits += p.circuits;
    stats.path_mismatches += p.path_mismatches;
    stats.dense_mismatches += p.dense_mismatches;
    stats.non_integral += p.non_integral;
  }
  return stats;
}

}  // namespace stabkit
