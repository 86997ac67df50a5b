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

#include "stabkit/dense.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace stabkit {

namespace {
constexpr std::complex<double> kImag{0.0, 1.0};
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto &a : amps) {
    s += std::norm(a);
  }
  return std::sqrt(s);
}

StateVector zero_state(std::size_t n) {
  if (n == 0 || n > kDenseMaxQubits) {
    throw std::invalid_argument(fmt::format("dense path supports 1..{} qubits, got {}", kDenseMaxQubits, n));
  }
  StateVector s;
  s.n = n;
  s.amps.assign(std::size_t{1} << n, 0.0);
  s.amps[0] = 1.0;
  return s;
}

void apply_ry_dense(StateVector &s, std::size_t qubit, double theta) {
  const double c = std::cos(theta / 2.0);
  const double sn = std::sin(theta / 2.0);
  const std::size_t mask = std::size_t{1} << qubit;
  for (std::size_t b = 0; b < s.amps.size(); ++b) {
    if (b & mask) continue;
    const auto a0 = s.amps[b];
    const auto a1 = s.amps[b | mask];
    s.amps[b] = c * a0 - sn * a1;
    s.amps[b | mask] = sn * a0 + c * a1;
  }
}

void apply_gate_dense(StateVector &s, const Gate &g) {
  const std::size_t amask = std::size_t{1} << g.a;
  switch (g.kind) {
    case GateKind::kRyQuarter:
      apply_ry_dense(s, g.a, static_cast<double>(g.b) * std::numbers::pi / 2.0);
      break;
    case GateKind::kCnot: {
      const std::size_t tmask = std::size_t{1} << g.b;
      for (std::size_t b = 0; b < s.amps.size(); ++b) {
        if ((b & amask) && !(b & tmask)) {
          std::swap(s.amps[b], s.amps[b | tmask]);
        }
      }
      break;
    }
    case GateKind::kH: {
      const double inv = 1.0 / std::numbers::sqrt2;
      for (std::size_t b = 0; b < s.amps.size(); ++b) {
        if (b & amask) continue;
        const auto a0 = s.amps[b];
        const auto a1 = s.amps[b | amask];
        s.amps[b] = inv * (a0 + a1);
        s.amps[b | amask] = inv * (a0 - a1);
      }
      break;
    }
    case GateKind::kS:
      for (std::size_t b = 0; b < s.amps.size(); ++b) {
        if (b & amask) s.amps[b] *= kImag;
      }
      break;
    case GateKind::kX:
      for (std::size_t b = 0; b < s.amps.size(); ++b) {
        if (!(b & amask)) std::swap(s.amps[b], s.amps[b | amask]);
      }
      break;
    case GateKind::kZ:
      for (std::size_t b = 0; b < s.amps.size(); ++b) {
        if (b & amask) s.amps[b] = -s.amps[b];
      }
      break;
  }
}

StateVector simulate_dense(const Circuit &c) {
  StateVector s = zero_state(c.num_qubits());
  for (const Gate &g : c.gates()) {
    apply_gate_dense(s, g);
  }
  return s;
}

std::complex<double> expectation_dense_complex(const StateVector &s, const PauliString &p) {
  if (p.num_qubits() != s.n) {
    throw std::invalid_argument(fmt::format("observable width {} != state width {}", p.num_qubits(), s.n));
  }
  // P|b> = i^e (-1)^{popcount(b & z)} |b ^ x> in the X^x Z^z form.
  const std::uint64_t xmask = p.x_words()[0];
  const std::uint64_t zmask = p.z_words()[0];
  static constexpr std::complex<double> kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const auto phase = kPhase[p.phase_exp()];
  std::complex<double> acc = 0.0;
  for (std::size_t b = 0; b < s.amps.size(); ++b) {
    const double sgn = (std::popcount(b & zmask) & 1) ? -1.0 : 1.0;
    acc += std::conj(s.amps[b ^ xmask]) * phase * sgn * s.amps[b];
  }
  return acc;
}

double expectation_dense(const StateVector &s, const PauliString &p) {
  return expectation_dense_complex(s, p).real();
}

}  // namespace stabkit
