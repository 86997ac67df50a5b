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

#include "stabkit/prob.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>

#include "stabkit/clifford.hpp"
#include "stabkit/parallel.hpp"
#include "stabkit/rng.hpp"

namespace stabkit {

namespace {

// Positions of the R_y gates inside a built ansatz circuit, slot-ordered,
// so enumeration and sampling can rewrite angles in place.
std::vector<std::size_t> ry_gate_positions(const Circuit &c, std::size_t expected) {
  std::vector<std::size_t> pos;
  pos.reserve(expected);
  const auto &gates = c.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].kind == GateKind::kRyQuarter) {
      pos.push_back(i);
    }
  }
  if (pos.size() != expected) {
    throw std::logic_error("unexpected R_y gate count in ansatz circuit");
  }
  return pos;
}

void tally(OutcomeCounts &counts, int outcome) {
  switch (outcome) {
    case +1: ++counts.plus_one; break;
    case -1: ++counts.minus_one; break;
    default: ++counts.zero; break;
  }
  ++counts.total;
}

}  // namespace

OutcomeCounts exact_counts(const AnsatzSpec &spec, const PauliString &obs) {
  const std::size_t slots = angle_count(spec);
  if (slots > 12 || (std::uint64_t{1} << (2 * slots)) > kEnumerationBudget) {
    throw std::invalid_argument(fmt::format(
        "enumeration budget exceeded: 4^{} angle vectors > 2^24", slots));
  }
  const std::uint64_t total = std::uint64_t{1} << (2 * slots);

  AngleVector angles(slots, 0);
  Circuit circuit = build_ansatz_circuit(spec, angles);
  const auto positions = ry_gate_positions(circuit, slots);
  PauliString scratch(spec.n_qubits);

  OutcomeCounts counts;
  for (std::uint64_t v = 0; v < total; ++v) {
    auto &gates = circuit.mutable_gates();
    for (std::size_t s = 0; s < slots; ++s) {
      gates[positions[s]].b = static_cast<std::uint32_t>((v >> (2 * s)) & 3u);
    }
    tally(counts, expectation_heisenberg(circuit, obs, scratch));
  }
  return counts;
}

OutcomeCounts mc_counts(const AnsatzSpec &spec, const PauliString &obs,
                        std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) {
    throw std::invalid_argument("samples must be >= 1");
  }
  if (obs.num_qubits() != spec.n_qubits) {
    throw std::invalid_argument(fmt::format("observable width {} != n_qubits {}",
                                            obs.num_qubits(), spec.n_qubits));
  }
  const std::size_t slots = angle_count(spec);

  std::vector<OutcomeCounts> partial(par::thread_count());
  par::for_chunks(samples, 256, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    AngleVector angles(slots, 0);
    Circuit circuit = build_ansatz_circuit(spec, angles);
    const auto positions = ry_gate_positions(circuit, slots);
    PauliString scratch(spec.n_qubits);
    OutcomeCounts local;
    for (std::size_t trial = begin; trial < end; ++trial) {
      auto rng = make_rng(seed, stream::kMonteCarlo, trial);
      auto &gates = circuit.mutable_gates();
      for (std::size_t s = 0; s < slots; ++s) {
        gates[positions[s]].b = uniform_quarter(rng);
      }
      tally(local, expectation_heisenberg(circuit, obs, scratch));
    }
    partial[chunk] = local;
  });

  OutcomeCounts counts;
  for (const auto &p : partial) {
    counts.total += p.total;
    counts.plus_one += p.plus_one;
    counts.minus_one += p.minus_one;
    counts.zero += p.zero;
  }
  return counts;
}

double DyadicProbability::value() const { return std::ldexp(1.0, -static_cast<int>(log2_den)); }

DyadicProbability theory_probability(std::size_t n, ObservableKind kind, Entanglement ent) {
  if (n < 1) {
    throw std::invalid_argument("n must be >= 1");
  }
  const bool strong = (kind == ObservableKind::kZString) == (ent == Entanglement::kReverseLinear);
  if (strong) {
    return {2};
  }
  // ceil(n/2 + 1) = ceil(n/2) + 1
  return {static_cast<std::uint32_t>((n + 1) / 2 + 1)};
}

double binomial_stderr(double p_hat, std::uint64_t samples) {
  return std::sqrt(p_hat * (1.0 - p_hat) / static_cast<double>(samples));
}

ExponentFit fit_exponent(double p_hat, std::size_t n) {
  if (n < 2) {
    throw std::invalid_argument("exponent fit needs n >= 2 (log n must not vanish)");
  }
  if (p_hat <= 0.0) {
    throw std::invalid_argument("unfittable: p_hat <= 0 has no finite exponent");
  }
  ExponentFit fit;
  fit.n = n;
  fit.p_hat = p_hat;
  fit.nu = std::log(1.0 / (4.0 * p_hat)) / std::log(static_cast<double>(n));
  fit.std_err = std::numeric_limits<double>::quiet_NaN();
  fit.noise_excursion = p_hat > 0.25;
  return fit;
}

ExponentFit fit_exponent(const OutcomeCounts &counts, std::size_t n) {
  ExponentFit fit = fit_exponent(counts.p_plus(), n);
  fit.std_err = binomial_stderr(fit.p_hat, counts.total);
  return fit;
}

std::vector<ScanPoint> scan(std::span<const std::size_t> n_values,
                            std::span<const double> r_values, std::size_t layers,
                            Entanglement ent, std::uint64_t samples, std::uint64_t seed) {
  if (n_values.empty() || r_values.empty()) {
    throw std::invalid_argument("scan needs non-empty n and r grids");
  }
  std::vector<ScanPoint> points;
  points.reserve(n_values.size() * r_values.size());
  std::size_t index = 0;
  for (std::size_t n : n_values) {
    for (double r : r_values) {
      const AnsatzSpec spec{n, layers, ent};
      const PauliString obs = PauliString::domain_wall(n, r);
      ScanPoint point;
      point.n = n;
      point.r = r;
      point.counts = mc_counts(spec, obs, samples, substream_seed(seed, stream::kScan, index));
      if (point.counts.plus_one > 0 && n >= 2) {
        point.fit = fit_exponent(point.counts, n);
      } else {
        point.fit.n = n;
        point.fit.p_hat = point.counts.p_plus();
        point.fit.nu = std::numeric_limits<double>::quiet_NaN();
        point.fit.std_err = binomial_stderr(point.fit.p_hat, point.counts.total);
        point.fit.noise_excursion = false;
      }
      points.push_back(std::move(point));
      ++index;
    }
  }
  return points;
}

void write_scan_csv(std::ostream &out, std::span<const ScanPoint> points,
                    std::size_t layers, Entanglement ent) {
  out << "n,r,layers,ent,samples,plus,minus,zero,p_hat,stderr,nu\n";
  for (const auto &p : points) {
    out << fmt::format("{},{},{},{},{},{},{},{},{:.17g},{:.17g},{:.17g}\n", p.n, p.r, layers,
                       to_string(ent), p.counts.total, p.counts.plus_one, p.counts.minus_one,
                       p.counts.zero, p.fit.p_hat, p.fit.std_err, p.fit.nu);
  }
}

}  // namespace stabkit
