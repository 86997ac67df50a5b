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
#include <functional>
#include <iosfwd>
#include <random>
#include <set>
#include <vector>

#include "stabkit/ansatz.hpp"
#include "stabkit/dataset.hpp"

namespace stabkit {

struct ForestParams {
  std::size_t n_trees = 100;
  std::size_t min_leaf = 2;
  double feature_subsample_fraction = 0.5;
};

struct BootstrapConfig {
  std::uint64_t sample_budget = 256;
  std::uint64_t opt_iterations = 32;
  ForestParams forest;
  std::size_t pool_size = 512;
  std::size_t mutation_count = 64;
  std::uint64_t seed = 0;
};

enum class Phase : std::uint8_t { kSample, kOptimize };

struct TraceRecord {
  Phase phase;
  std::uint64_t iter;
  AngleVector angles;
  double loss;
};

/// Evaluation-ordered record of the run; best_so_far() is non-increasing.
struct Trace {
  std::vector<TraceRecord> records;
  std::vector<double> best_so_far() const;
};

struct TraceMetrics {
  double min_loss = 0.0;
  /// Unbiased variance over the Sample-phase losses only.
  double sample_variance = 0.0;
  /// False when fewer than two sample records exist (variance set to 0).
  bool variance_defined = true;
};

TraceMetrics trace_metrics(const Trace &t);

struct Observation {
  AngleVector angles;
  double loss;
};

/// One regression tree over categorical angle slots; every split tests
/// slot == level.
struct TreeNode {
  std::int32_t slot = -1;     // -1 marks a leaf
  std::uint8_t level = 0;
  std::int32_t eq_child = -1;
  std::int32_t neq_child = -1;
  double value = 0.0;
};

struct RegressionTree {
  std::vector<TreeNode> nodes;
  double predict(std::span<const std::uint8_t> x) const;
};

struct ForestPrediction {
  double mean = 0.0;
  double spread = 0.0;  // standard deviation across trees
};

class SurrogateForest {
 public:
  SurrogateForest() = default;
  SurrogateForest(std::vector<RegressionTree> trees,
                  std::vector<std::vector<std::uint32_t>> bootstrap_indices, std::size_t n_slots);

  std::size_t n_trees() const { return trees_.size(); }
  std::size_t n_slots() const { return n_slots_; }
  const std::vector<RegressionTree> &trees() const { return trees_; }
  const std::vector<std::vector<std::uint32_t>> &bootstrap_indices() const {
    return bootstrap_indices_;
  }

  ForestPrediction predict(const AngleVector &x) const;

 private:
  std::vector<RegressionTree> trees_;
  std::vector<std::vector<std::uint32_t>> bootstrap_indices_;  // per tree
  std::size_t n_slots_ = 0;
};

/// Variance-reduction trees on bootstrap resamples with a random feature
/// subsample per node; deterministic for a fixed seed.
SurrogateForest fit_forest(const std::vector<Observation> &observations,
                           const ForestParams &params, std::uint64_t seed);

/// Greedy acquisition over a candidate pool of uniform draws plus
/// single-slot mutations of the incumbent. Returns the unevaluated
/// candidate with minimal predicted mean; exact ties are broken by maximal
/// minimum Hamming distance to the evaluated set, then by pool order. When
/// the surrogate is uninformative (all predictions equal) the distance
/// tie-break takes over and the step is pure exploration.
AngleVector greedy_acquire(const SurrogateForest &forest, const std::set<AngleVector> &evaluated,
                           const AngleVector &incumbent, std::size_t pool_size,
                           std::size_t mutation_count, std::mt19937_64 &rng);

/// Expected improvement exactly as commonly written for maximization:
/// (mu - f_best) Phi(Z) + sigma phi(Z) with Z = (mu - f_best) / sigma, and
/// max(mu - f_best, 0) at sigma = 0. Callers minimizing a loss negate their
/// inputs.
double expected_improvement(double mu, double sigma, double f_best);

using LossFn = std::function<double(const AngleVector &)>;

/// Uniform sampling phase; trial i draws from its own (seed, i) generator
/// so the trace is worker-count invariant.
Trace sample_phase(const BootstrapConfig &cfg, std::size_t n_slots, const LossFn &loss);

struct BootstrapResult {
  Trace trace;
  AngleVector best_angles;
  double best_loss = 0.0;
};

/// Full two-phase run: sampling, then opt_iterations rounds of
/// fit -> acquire -> evaluate -> append.
BootstrapResult run_bootstrap(const BootstrapConfig &cfg, const AnsatzSpec &spec,
                              const PauliString &obs, const Dataset &data);

/// Same loop over an arbitrary loss callable (used by tests and benchmarks).
BootstrapResult run_bootstrap_with_loss(const BootstrapConfig &cfg, std::size_t n_slots,
                                        const LossFn &loss);

/// JSON-lines trace: one {"phase", "iter", "angles", "loss"} object per line.
void write_trace_jsonl(std::ostream &out, const Trace &t);

/// Summary JSON: {min_loss, sample_variance, best_angles, config, seed};
/// manifest_ref, when non-empty, records the manifest that produced the run.
void write_summary_json(std::ostream &out, const BootstrapConfig &cfg,
                        const BootstrapResult &result, const std::string &manifest_ref = "");

}  // namespace stabkit
