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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stabkit {

/// Signed Pauli operator on n qubits in symplectic form.
///
/// The represented operator is
///
///     i^phase_exp * prod_q X_q^{x_q} * prod_q Z_q^{z_q}
///
/// with x/z bits packed into 64-bit words (qubit q lives in bit q%64 of
/// word q/64). Under this convention a qubit with both bits set carries an
/// XZ factor, i.e. the letter Y contributes one factor of i to phase_exp,
/// and a string is Hermitian exactly when phase_exp and the number of Y
/// letters have equal parity.
class PauliString {
 public:
  PauliString() = default;

  /// Identity on n qubits (phase +1).
  explicit PauliString(std::size_t n);

  static PauliString identity(std::size_t n) { return PauliString(n); }

  /// Builds a Hermitian string from letters I/X/Y/Z; sign must be +1 or -1.
  static PauliString from_letters(std::string_view letters, int sign = +1);

  /// Parses the text form used in CLI flags and CSV columns: an optional
  /// leading '+'/'-' followed by letters, e.g. "ZZXX" or "-XX".
  static PauliString parse(std::string_view text);

  /// Domain-wall string Z...ZX...X: k = floor(r*n + 0.5) X letters on the
  /// highest qubit indices, Z letters elsewhere. r=0 is the Z string, r=1
  /// the X string.
  static PauliString domain_wall(std::size_t n, double r);

  std::size_t num_qubits() const { return n_; }
  std::uint8_t phase_exp() const { return phase_; }
  void set_phase_exp(std::uint8_t e) { phase_ = e & 3u; }
  void add_phase_exp(std::uint8_t delta) { phase_ = (phase_ + delta) & 3u; }

  bool x_bit(std::size_t q) const { return (x_[q >> 6] >> (q & 63)) & 1u; }
  bool z_bit(std::size_t q) const { return (z_[q >> 6] >> (q & 63)) & 1u; }
  void set_x(std::size_t q, bool v);
  void set_z(std::size_t q, bool v);

  std::span<const std::uint64_t> x_words() const { return x_; }
  std::span<const std::uint64_t> z_words() const { return z_; }
  std::span<std::uint64_t> x_words() { return x_; }
  std::span<std::uint64_t> z_words() { return z_; }

  char letter(std::size_t q) const;

  /// Number of non-identity letters.
  std::size_t weight() const;
  std::size_t y_count() const;
  bool x_support_empty() const;
  bool is_identity() const;

  bool is_hermitian() const;

  /// +1 or -1; only meaningful for Hermitian strings (throws otherwise).
  int sign() const;

  /// "+ZZXX" style text; non-Hermitian phases render as "+i"/"-i" prefixes.
  std::string str() const;

  bool operator==(const PauliString &other) const = default;

 private:
  std::size_t n_ = 0;
  std::uint8_t phase_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

/// True iff p and q commute (symplectic inner product is even).
bool commutes(const PauliString &p, const PauliString &q);

/// Operator product with exact phase tracking.
PauliString multiply(const PauliString &p, const PauliString &q);

inline std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

}  // namespace stabkit
