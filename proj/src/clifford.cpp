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

#include "stabkit/clifford.hpp"

#include <bit>
#include <stdexcept>

#include <fmt/format.h>

namespace stabkit {

namespace {

inline void check_qubit(const PauliString &p, std::uint32_t q) {
  if (q >= p.num_qubits()) {
    throw std::out_of_range(fmt::format("gate qubit {} out of range for n={}", q, p.num_qubits()));
  }
}

// R_y(k*pi/2) conjugation, g p g^dagger:
//   k=1: X -> -Z, Z -> X, Y -> Y;  k=2: X -> -X, Z -> -Z;  k=3: X -> Z, Z -> -X.
// In the X^x Z^z representation the sign flips live entirely in phase_exp
// (an XZ pair maps to itself for every k).
inline void conj_ry_quarter(PauliString &p, std::uint32_t q, std::uint32_t k) {
  const bool x = p.x_bit(q);
  const bool z = p.z_bit(q);
  switch (k) {
    case 0:
      break;
    case 1:
      p.set_x(q, z);
      p.set_z(q, x);
      if (x && !z) p.add_phase_exp(2);
      break;
    case 2:
      if (x != z) p.add_phase_exp(2);
      break;
    case 3:
      p.set_x(q, z);
      p.set_z(q, x);
      if (z && !x) p.add_phase_exp(2);
      break;
    default:
      throw std::invalid_argument(fmt::format("quarter-turn index {} not in [0, 4)", k));
  }
}

// CNOT conjugation: X_c -> X_c X_t, Z_t -> Z_c Z_t, X_t and Z_c fixed.
// In the X^x Z^z representation no reordering crosses an XZ pair on the
// same qubit, so the phase is untouched.
inline void conj_cnot(PauliString &p, std::uint32_t c, std::uint32_t t) {
  p.set_x(t, p.x_bit(t) ^ p.x_bit(c));
  p.set_z(c, p.z_bit(c) ^ p.z_bit(t));
}

inline void conj_h(PauliString &p, std::uint32_t q) {
  const bool x = p.x_bit(q);
  const bool z = p.z_bit(q);
  p.set_x(q, z);
  p.set_z(q, x);
  if (x && z) p.add_phase_exp(2);
}

// S X S^dagger = Y = i XZ, S Y S^dagger = -X.
inline void conj_s(PauliString &p, std::uint32_t q, bool adjoint) {
  if (p.x_bit(q)) {
    p.set_z(q, !p.z_bit(q));
    p.add_phase_exp(adjoint ? 3 : 1);
  }
}

inline void conj_pauli_x(PauliString &p, std::uint32_t q) {
  if (p.z_bit(q)) p.add_phase_exp(2);
}

inline void conj_pauli_z(PauliString &p, std::uint32_t q) {
  if (p.x_bit(q)) p.add_phase_exp(2);
}

inline void conj_dispatch(PauliString &p, const Gate &g, bool adjoint) {
  switch (g.kind) {
    case GateKind::kRyQuarter:
      check_qubit(p, g.a);
      conj_ry_quarter(p, g.a, adjoint ? ((4 - g.b) & 3u) : g.b);
      break;
    case GateKind::kCnot:
      check_qubit(p, g.a);
      check_qubit(p, g.b);
      conj_cnot(p, g.a, g.b);
      break;
    case GateKind::kH:
      check_qubit(p, g.a);
      conj_h(p, g.a);
      break;
    case GateKind::kS:
      check_qubit(p, g.a);
      conj_s(p, g.a, adjoint);
      break;
    case GateKind::kX:
      check_qubit(p, g.a);
      conj_pauli_x(p, g.a);
      break;
    case GateKind::kZ:
      check_qubit(p, g.a);
      conj_pauli_z(p, g.a);
      break;
  }
}

}  // namespace

void conjugate_gate_inplace(PauliString &p, const Gate &g) { conj_dispatch(p, g, false); }

PauliString conjugate_gate(const PauliString &p, const Gate &g) {
  PauliString out = p;
  conjugate_gate_inplace(out, g);
  return out;
}

void conjugate_gate_adjoint_inplace(PauliString &p, const Gate &g) { conj_dispatch(p, g, true); }

int expectation_heisenberg(const Circuit &c, const PauliString &p, PauliString &scratch) {
  if (c.num_qubits() != p.num_qubits()) {
    throw std::invalid_argument(fmt::format("circuit width {} != observable width {}",
                                            c.num_qubits(), p.num_qubits()));
  }
  if (!p.is_hermitian()) {
    throw std::invalid_argument("observable must be Hermitian");
  }
  scratch = p;
  const auto &gates = c.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    conjugate_gate_adjoint_inplace(scratch, *it);
  }
  if (!scratch.x_support_empty()) {
    return 0;
  }
  // A Hermitian string with empty X support is a signed Z string.
  return scratch.phase_exp() == 0 ? +1 : -1;
}

int expectation_heisenberg(const Circuit &c, const PauliString &p) {
  PauliString scratch(p.num_qubits());
  return expectation_heisenberg(c, p, scratch);
}

StabilizerTableau::StabilizerTableau(std::size_t n) : n_(n) {
  if (n == 0) {
    throw std::invalid_argument("tableau needs at least one qubit");
  }
  rows_.reserve(n);
  for (std::size_t q = 0; q < n; ++q) {
    PauliString row(n);
    row.set_z(q, true);
    rows_.push_back(std::move(row));
  }
}

void StabilizerTableau::apply_gate(const Gate &g) {
  for (PauliString &row : rows_) {
    conjugate_gate_inplace(row, g);
  }
}

void StabilizerTableau::apply_circuit(const Circuit &c) {
  if (c.num_qubits() != n_) {
    throw std::invalid_argument(fmt::format("circuit width {} != tableau width {}", c.num_qubits(), n_));
  }
  for (const Gate &g : c.gates()) {
    apply_gate(g);
  }
}

namespace {

// Symplectic (x|z) bit vector of a row, for rank computation.
std::vector<std::uint64_t> symplectic_bits(const PauliString &p) {
  std::vector<std::uint64_t> v;
  auto x = p.x_words(), z = p.z_words();
  v.reserve(x.size() + z.size());
  v.insert(v.end(), x.begin(), x.end());
  v.insert(v.end(), z.begin(), z.end());
  return v;
}

bool bit_at(const std::vector<std::uint64_t> &v, std::size_t b) {
  return (v[b >> 6] >> (b & 63)) & 1u;
}

}  // namespace

bool StabilizerTableau::is_valid() const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!rows_[i].is_hermitian()) return false;
    for (std::size_t j = i + 1; j < rows_.size(); ++j) {
      if (!commutes(rows_[i], rows_[j])) return false;
    }
  }
  // Rank over GF(2) must be n.
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(n_);
  for (const auto &row : rows_) {
    m.push_back(symplectic_bits(row));
  }
  const std::size_t bits = 2 * ((n_ + 63) / 64) * 64;
  std::size_t rank = 0;
  for (std::size_t b = 0; b < bits && rank < m.size(); ++b) {
    std::size_t pivot = rank;
    while (pivot < m.size() && !bit_at(m[pivot], b)) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t j = rank + 1; j < m.size(); ++j) {
      if (bit_at(m[j], b)) {
        for (std::size_t w = 0; w < m[j].size(); ++w) m[j][w] ^= m[rank][w];
      }
    }
    ++rank;
  }
  return rank == n_;
}

StabilizerTableau tableau_from_circuit(const Circuit &c) {
  StabilizerTableau t(c.num_qubits());
  t.apply_circuit(c);
  return t;
}

int expectation_tableau(const StabilizerTableau &t, const PauliString &p) {
  if (t.num_qubits() != p.num_qubits()) {
    throw std::invalid_argument(fmt::format("tableau width {} != observable width {}",
                                            t.num_qubits(), p.num_qubits()));
  }
  if (!p.is_hermitian()) {
    throw std::invalid_argument("observable must be Hermitian");
  }
  for (const PauliString &row : t.rows()) {
    if (!commutes(p, row)) {
      return 0;
    }
  }

  // P commutes with the full group, so its unsigned part is a product of
  // generators. Eliminate to echelon form with true Pauli multiplications
  // (signs ride along), then peel P's bits off pivot by pivot.
  const std::size_t n = t.num_qubits();
  std::vector<PauliString> rows = t.rows();
  const std::size_t words = word_count(n);
  const std::size_t bits = 2 * words * 64;

  const auto row_bit = [words](const PauliString &r, std::size_t b) {
    if (b < words * 64) {
      return (r.x_words()[b >> 6] >> (b & 63)) & 1ull;
    }
    const std::size_t zb = b - words * 64;
    return (r.z_words()[zb >> 6] >> (zb & 63)) & 1ull;
  };

  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (bit, row index)
  std::size_t rank = 0;
  for (std::size_t b = 0; b < bits && rank < rows.size(); ++b) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !row_bit(rows[pivot], b)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t j = rank + 1; j < rows.size(); ++j) {
      if (row_bit(rows[j], b)) {
        rows[j] = multiply(rows[j], rows[rank]);
      }
    }
    pivots.emplace_back(b, rank);
    ++rank;
  }

  PauliString acc = PauliString::identity(n);
  PauliString rem = p;
  for (const auto &[b, idx] : pivots) {
    if (row_bit(rem, b)) {
      acc = multiply(acc, rows[idx]);
      rem = multiply(rem, rows[idx]);
    }
  }
  if (!rem.is_identity()) {
    throw std::logic_error("commuting observable not in the stabilizer group; tableau corrupt");
  }
  // p = i^(e_p - e_acc) * acc and <acc> = +1 for a product of generators.
  const auto diff = (p.phase_exp() + 4 - acc.phase_exp()) & 3u;
  if (diff == 0) return +1;
  if (diff == 2) return -1;
  throw std::logic_error("non-Hermitian sign while resolving tableau expectation");
}

}  // namespace stabkit
