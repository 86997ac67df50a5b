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

#include "stabkit/pauli.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace stabkit {

PauliString::PauliString(std::size_t n)
    : n_(n), phase_(0), x_(word_count(n), 0), z_(word_count(n), 0) {
  if (n == 0) {
    throw std::invalid_argument("PauliString needs at least one qubit");
  }
}

void PauliString::set_x(std::size_t q, bool v) {
  const std::uint64_t bit = 1ull << (q & 63);
  if (v) {
    x_[q >> 6] |= bit;
  } else {
    x_[q >> 6] &= ~bit;
  }
}

void PauliString::set_z(std::size_t q, bool v) {
  const std::uint64_t bit = 1ull << (q & 63);
  if (v) {
    z_[q >> 6] |= bit;
  } else {
    z_[q >> 6] &= ~bit;
  }
}

PauliString PauliString::from_letters(std::string_view letters, int sign) {
  if (letters.empty()) {
    throw std::invalid_argument("empty letter sequence");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
  PauliString p(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I':
        break;
      case 'X':
        p.set_x(q, true);
        break;
      case 'Z':
        p.set_z(q, true);
        break;
      case 'Y':
        // Y = i * XZ, so each Y letter adds one i to the stored phase.
        p.set_x(q, true);
        p.set_z(q, true);
        p.add_phase_exp(1);
        break;
      default:
        throw std::invalid_argument(fmt::format("invalid Pauli letter '{}'", letters[q]));
    }
  }
  if (sign == -1) {
    p.add_phase_exp(2);
  }
  return p;
}

PauliString PauliString::parse(std::string_view text) {
  int sign = +1;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    sign = text.front() == '-' ? -1 : +1;
    text.remove_prefix(1);
  }
  return from_letters(text, sign);
}

PauliString PauliString::domain_wall(std::size_t n, double r) {
  if (n == 0) {
    throw std::invalid_argument("domain_wall needs n >= 1");
  }
  if (!(r >= 0.0 && r <= 1.0)) {
    throw std::invalid_argument(fmt::format("X fraction r={} outside [0, 1]", r));
  }
  // Round half up so scans over an r grid are reproducible.
  const auto k = static_cast<std::size_t>(std::floor(r * static_cast<double>(n) + 0.5));
  PauliString p(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (q < n - k) {
      p.set_z(q, true);
    } else {
      p.set_x(q, true);
    }
  }
  return p;
}

char PauliString::letter(std::size_t q) const {
  const bool x = x_bit(q);
  const bool z = z_bit(q);
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    w += std::popcount(x_[i] | z_[i]);
  }
  return w;
}

std::size_t PauliString::y_count() const {
  std::size_t w = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    w += std::popcount(x_[i] & z_[i]);
  }
  return w;
}

bool PauliString::x_support_empty() const {
  for (std::uint64_t w : x_) {
    if (w != 0) return false;
  }
  return true;
}

bool PauliString::is_identity() const {
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if ((x_[i] | z_[i]) != 0) return false;
  }
  return true;
}

bool PauliString::is_hermitian() const {
  return ((phase_ ^ y_count()) & 1u) == 0;
}

int PauliString::sign() const {
  if (!is_hermitian()) {
    throw std::logic_error("sign() called on a non-Hermitian Pauli string");
  }
  const auto e = (phase_ + 4 - (y_count() & 3u)) & 3u;
  return e == 0 ? +1 : -1;
}

std::string PauliString::str() const {
  static constexpr const char *kPrefix[4] = {"+", "+i", "-", "-i"};
  const auto e = (phase_ + 4 - (y_count() & 3u)) & 3u;
  std::string out = kPrefix[e];
  out.reserve(out.size() + n_);
  for (std::size_t q = 0; q < n_; ++q) {
    out.push_back(letter(q));
  }
  return out;
}

bool commutes(const PauliString &p, const PauliString &q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument(fmt::format("Pauli length mismatch: {} vs {}",
                                            p.num_qubits(), q.num_qubits()));
  }
  auto px = p.x_words(), pz = p.z_words();
  auto qx = q.x_words(), qz = q.z_words();
  std::size_t parity = 0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    parity += std::popcount(px[i] & qz[i]);
    parity += std::popcount(pz[i] & qx[i]);
  }
  return (parity & 1u) == 0;
}

PauliString multiply(const PauliString &p, const PauliString &q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument(fmt::format("Pauli length mismatch: {} vs {}",
                                            p.num_qubits(), q.num_qubits()));
  }
  PauliString out(p.num_qubits());
  auto ox = out.x_words(), oz = out.z_words();
  auto px = p.x_words(), pz = p.z_words();
  auto qx = q.x_words(), qz = q.z_words();
  // Moving q's X block to the left across p's Z block anticommutes once per
  // qubit where both are set; everything else commutes in the X^x Z^z form.
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    crossings += std::popcount(pz[i] & qx[i]);
    ox[i] = px[i] ^ qx[i];
    oz[i] = pz[i] ^ qz[i];
  }
  out.set_phase_exp(static_cast<std::uint8_t>((p.phase_exp() + q.phase_exp() + 2 * crossings) & 3u));
  return out;
}

}  // namespace stabkit
