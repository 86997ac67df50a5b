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
#include <iosfwd>
#include <span>
#include <vector>

#include "stabkit/ansatz.hpp"
#include "stabkit/pauli.hpp"

namespace stabkit {

/// Tally of observable outcomes over a set of angle vectors.
struct OutcomeCounts {
  std::uint64_t total = 0;
  std::uint64_t plus_one = 0;
  std::uint64_t minus_one = 0;
  std::uint64_t zero = 0;

  double p_plus() const { return static_cast<double>(plus_one) / static_cast<double>(total); }
  double p_minus() const { return static_cast<double>(minus_one) / static_cast<double>(total); }
  double p_zero() const { return static_cast<double>(zero) / static_cast<double>(total); }
};

/// Enumeration budget: 4^(n_qubits*n_layers) must not exceed 2^24.
inline constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 24;

/// Exact tally over every angle vector in base-4 counter order (slot 0 is
/// the least-significant digit). Counts are exact integers, so closed-form
/// checks against the counts are equality checks.
OutcomeCounts exact_counts(const AnsatzSpec &spec, const PauliString &obs);

/// Monte Carlo tally over `samples` uniform angle vectors. Trial i draws
/// from its own generator seeded by (seed, i), so the counts are identical
/// for any worker count.
OutcomeCounts mc_counts(const AnsatzSpec &spec, const PauliString &obs,
                        std::uint64_t samples, std::uint64_t seed);

enum class ObservableKind : std::uint8_t { kZString, kXString };

/// All closed-form single-layer probabilities are powers of two, so the
/// exact value is carried as 1 / 2^log2_den.
struct DyadicProbability {
  std::uint32_t log2_den = 0;
  double value() const;
};

/// Closed-form P(outcome = +1) = P(outcome = -1) for single-layer families:
/// 1/4 for (Z, ReverseLinear) and (X, Linear); 1/2^ceil(n/2 + 1) for
/// (Z, Linear) and (X, ReverseLinear). P(outcome = 0) follows as
/// 1 - 2 * value().
DyadicProbability theory_probability(std::size_t n, ObservableKind kind, Entanglement ent);

/// sqrt(p(1-p)/samples).
double binomial_stderr(double p_hat, std::uint64_t samples);

/// Pointwise critical-exponent fit from p(r, n) = 1 / (4 n^nu).
struct ExponentFit {
  std::size_t n = 0;
  double p_hat = 0.0;
  double nu = 0.0;
  double std_err = 0.0;
  /// Set when p_hat > 1/4, which inverts to a negative exponent; such
  /// points are statistical excursions, not physical decays.
  bool noise_excursion = false;
};

/// Throws for p_hat <= 0 ("unfittable") and n < 2.
ExponentFit fit_exponent(double p_hat, std::size_t n);
ExponentFit fit_exponent(const OutcomeCounts &counts, std::size_t n);

struct ScanPoint {
  std::size_t n = 0;
  double r = 0.0;
  OutcomeCounts counts;
  ExponentFit fit;  // fit.nu is NaN when no nontrivial outcome was seen
};

/// Monte Carlo sweep over an (n, r) grid with domain-wall observables,
/// emitted in deterministic grid order (n-major). Each grid point gets its
/// own sub-seed derived from (seed, point index).
std::vector<ScanPoint> scan(std::span<const std::size_t> n_values,
                            std::span<const double> r_values, std::size_t layers,
                            Entanglement ent, std::uint64_t samples, std::uint64_t seed);

/// CSV schema: n,r,layers,ent,samples,plus,minus,zero,p_hat,stderr,nu
void write_scan_csv(std::ostream &out, std::span<const ScanPoint> points,
                    std::size_t layers, Entanglement ent);

}  // namespace stabkit
