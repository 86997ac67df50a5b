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

#include "stabkit/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "stabkit/parallel.hpp"
#include "stabkit/rng.hpp"

namespace stabkit {

std::vector<double> Trace::best_so_far() const {
  std::vector<double> best;
  best.reserve(records.size());
  double cur = std::numeric_limits<double>::infinity();
  for (const auto &rec : records) {
    cur = std::min(cur, rec.loss);
    best.push_back(cur);
  }
  return best;
}

TraceMetrics trace_metrics(const Trace &t) {
  if (t.records.empty()) {
    throw std::invalid_argument("trace_metrics on an empty trace");
  }
  TraceMetrics m;
  m.min_loss = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  std::size_t n_sample = 0;
  for (const auto &rec : t.records) {
    m.min_loss = std::min(m.min_loss, rec.loss);
    if (rec.phase == Phase::kSample) {
      sum += rec.loss;
      ++n_sample;
    }
  }
  if (n_sample < 2) {
    m.sample_variance = 0.0;
    m.variance_defined = false;
    return m;
  }
  const double mean = sum / static_cast<double>(n_sample);
  double ss = 0.0;
  for (const auto &rec : t.records) {
    if (rec.phase == Phase::kSample) {
      const double d = rec.loss - mean;
      ss += d * d;
    }
  }
  m.sample_variance = ss / static_cast<double>(n_sample - 1);
  return m;
}

double RegressionTree::predict(std::span<const std::uint8_t> x) const {
  std::int32_t node = 0;
  while (nodes[node].slot >= 0) {
    const auto &nd = nodes[node];
    node = x[static_cast<std::size_t>(nd.slot)] == nd.level ? nd.eq_child : nd.neq_child;
  }
  return nodes[node].value;
}

SurrogateForest::SurrogateForest(std::vector<RegressionTree> trees,
                                 std::vector<std::vector<std::uint32_t>> bootstrap_indices,
                                 std::size_t n_slots)
    : trees_(std::move(trees)), bootstrap_indices_(std::move(bootstrap_indices)), n_slots_(n_slots) {}

ForestPrediction SurrogateForest::predict(const AngleVector &x) const {
  if (x.size() != n_slots_) {
    throw std::invalid_argument(fmt::format("vector length {} != trained slot count {}",
                                            x.size(), n_slots_));
  }
  double sum = 0.0;
  double sumsq = 0.0;
  for (const auto &tree : trees_) {
    const double v = tree.predict(x);
    sum += v;
    sumsq += v * v;
  }
  const auto t = static_cast<double>(trees_.size());
  ForestPrediction pred;
  pred.mean = sum / t;
  pred.spread = std::sqrt(std::max(0.0, sumsq / t - pred.mean * pred.mean));
  return pred;
}

namespace {

struct TreeBuilder {
  const std::vector<Observation> &obs;
  const ForestParams &params;
  std::size_t n_slots;
  std::mt19937_64 &rng;
  std::vector<TreeNode> nodes;

  // indices: positions into `sample` (the bootstrap resample).
  const std::vector<std::uint32_t> &sample;

  std::int32_t build(std::vector<std::uint32_t> &members) {
    double sum = 0.0;
    double sumsq = 0.0;
    for (auto m : members) {
      const double y = obs[sample[m]].loss;
      sum += y;
      sumsq += y * y;
    }
    const auto count = static_cast<double>(members.size());
    const double mean = sum / count;
    const double sse = sumsq - sum * sum / count;

    const auto make_leaf = [&]() {
      TreeNode leaf;
      leaf.value = mean;
      nodes.push_back(leaf);
      return static_cast<std::int32_t>(nodes.size() - 1);
    };

    if (members.size() < 2 * params.min_leaf || sse <= 0.0) {
      return make_leaf();
    }

    // Random feature subsample for this node.
    std::vector<std::uint32_t> slots(n_slots);
    std::iota(slots.begin(), slots.end(), 0);
    const auto n_try = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(params.feature_subsample_fraction *
                                              static_cast<double>(n_slots))));
    for (std::size_t i = 0; i < n_try; ++i) {
      const auto j = i + uniform_below(rng, slots.size() - i);
      std::swap(slots[i], slots[j]);
    }

    double best_gain = 0.0;
    std::int32_t best_slot = -1;
    std::uint8_t best_level = 0;
    for (std::size_t i = 0; i < n_try; ++i) {
      const std::uint32_t slot = slots[i];
      double lsum[4] = {0, 0, 0, 0};
      double lsumsq[4] = {0, 0, 0, 0};
      std::size_t lcount[4] = {0, 0, 0, 0};
      for (auto m : members) {
        const auto lv = obs[sample[m]].angles[slot];
        const double y = obs[sample[m]].loss;
        lsum[lv] += y;
        lsumsq[lv] += y * y;
        ++lcount[lv];
      }
      for (int lv = 0; lv < 4; ++lv) {
        const std::size_t ce = lcount[lv];
        const std::size_t cn = members.size() - ce;
        if (ce < params.min_leaf || cn < params.min_leaf) {
          continue;
        }
        const double esum = lsum[lv];
        const double esumsq = lsumsq[lv];
        const double nsum = sum - esum;
        const double nsumsq = sumsq - esumsq;
        const double sse_eq = esumsq - esum * esum / static_cast<double>(ce);
        const double sse_neq = nsumsq - nsum * nsum / static_cast<double>(cn);
        const double gain = sse - sse_eq - sse_neq;
        if (gain > best_gain + 1e-12) {
          best_gain = gain;
          best_slot = static_cast<std::int32_t>(slot);
          best_level = static_cast<std::uint8_t>(lv);
        }
      }
    }

    if (best_slot < 0) {
      return make_leaf();
    }

    std::vector<std::uint32_t> eq_members;
    std::vector<std::uint32_t> neq_members;
    for (auto m : members) {
      if (obs[sample[m]].angles[static_cast<std::size_t>(best_slot)] == best_level) {
        eq_members.push_back(m);
      } else {
        neq_members.push_back(m);
      }
    }
    members.clear();
    members.shrink_to_fit();

    const auto index = static_cast<std::int32_t>(nodes.size());
    nodes.emplace_back();
    nodes[index].slot = best_slot;
    nodes[index].level = best_level;
    const auto eq_child = build(eq_members);
    const auto neq_child = build(neq_members);
    nodes[index].eq_child = eq_child;
    nodes[index].neq_child = neq_child;
    return index;
  }
};

}  // namespace

SurrogateForest fit_forest(const std::vector<Observation> &observations,
                           const ForestParams &params, std::uint64_t seed) {
  if (observations.size() < 2) {
    throw std::invalid_argument("forest fit needs at least 2 observations");
  }
  if (params.n_trees < 1 || params.min_leaf < 1) {
    throw std::invalid_argument("forest needs n_trees >= 1 and min_leaf >= 1");
  }
  if (!(params.feature_subsample_fraction > 0.0 && params.feature_subsample_fraction <= 1.0)) {
    throw std::invalid_argument("feature_subsample_fraction outside (0, 1]");
  }
  const std::size_t n_slots = observations.front().angles.size();
  for (const auto &o : observations) {
    if (o.angles.size() != n_slots) {
      throw std::invalid_argument("observations have mixed slot counts");
    }
  }

  std::vector<RegressionTree> trees(params.n_trees);
  std::vector<std::vector<std::uint32_t>> resamples(params.n_trees);
  par::for_chunks(params.n_trees, 4, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t t = begin; t < end; ++t) {
      auto rng = make_rng(seed, stream::kForest, t);
      auto &sample = resamples[t];
      sample.resize(observations.size());
      for (auto &idx : sample) {
        idx = static_cast<std::uint32_t>(uniform_below(rng, observations.size()));
      }
      std::vector<std::uint32_t> members(sample.size());
      std::iota(members.begin(), members.end(), 0);
      TreeBuilder builder{observations, params, n_slots, rng, {}, sample};
      builder.build(members);
      trees[t].nodes = std::move(builder.nodes);
    }
  });
  return SurrogateForest(std::move(trees), std::move(resamples), n_slots);
}

namespace {

std::string angles_to_string(const AngleVector &v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out.push_back(',');
    out.push_back(static_cast<char>('0' + v[i]));
  }
  return out;
}

std::size_t hamming(const AngleVector &a, const AngleVector &b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d += a[i] != b[i];
  }
  return d;
}

std::size_t min_hamming(const AngleVector &x, const std::set<AngleVector> &pool) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto &p : pool) {
    best = std::min(best, hamming(x, p));
  }
  return best;
}

AngleVector uniform_vector(std::size_t n_slots, std::mt19937_64 &rng) {
  AngleVector v(n_slots);
  for (auto &e : v) {
    e = uniform_quarter(rng);
  }
  return v;
}

std::vector<AngleVector> build_pool(const AngleVector &incumbent, std::size_t pool_size,
                                    std::size_t mutation_count, std::mt19937_64 &rng) {
  const std::size_t n_slots = incumbent.size();
  std::vector<AngleVector> pool;
  pool.reserve(pool_size + mutation_count);
  for (std::size_t i = 0; i < pool_size; ++i) {
    pool.push_back(uniform_vector(n_slots, rng));
  }
  for (std::size_t i = 0; i < mutation_count; ++i) {
    AngleVector v = incumbent;
    const auto slot = static_cast<std::size_t>(uniform_below(rng, n_slots));
    v[slot] = static_cast<std::uint8_t>((v[slot] + 1 + uniform_below(rng, 3)) & 3u);
    pool.push_back(std::move(v));
  }
  return pool;
}

}  // namespace

AngleVector greedy_acquire(const SurrogateForest &forest, const std::set<AngleVector> &evaluated,
                           const AngleVector &incumbent, std::size_t pool_size,
                           std::size_t mutation_count, std::mt19937_64 &rng) {
  if (pool_size < 1) {
    throw std::invalid_argument("pool_size must be >= 1");
  }
  if (incumbent.empty()) {
    throw std::invalid_argument("acquisition needs a non-empty incumbent");
  }
  for (int attempt = 0; attempt < 2; ++attempt) {
    const auto pool = build_pool(incumbent, pool_size, mutation_count, rng);
    const AngleVector *best = nullptr;
    double best_mean = 0.0;
    std::size_t best_dist = 0;
    for (const auto &cand : pool) {
      if (evaluated.count(cand)) {
        continue;
      }
      const double mean = forest.predict(cand).mean;
      if (best == nullptr || mean < best_mean) {
        best = &cand;
        best_mean = mean;
        best_dist = min_hamming(cand, evaluated);
      } else if (mean == best_mean) {
        // Exploration tie-break: prefer the candidate farthest from
        // everything already evaluated; earlier pool position wins ties.
        const std::size_t dist = min_hamming(cand, evaluated);
        if (dist > best_dist) {
          best = &cand;
          best_dist = dist;
        }
      }
    }
    if (best != nullptr) {
      return *best;
    }
  }
  throw std::runtime_error("acquisition pool exhausted: every candidate was already evaluated");
}

double expected_improvement(double mu, double sigma, double f_best) {
  if (sigma < 0.0) {
    throw std::invalid_argument("sigma must be non-negative");
  }
  const double delta = mu - f_best;
  if (sigma == 0.0) {
    return std::max(delta, 0.0);
  }
  const double z = delta / sigma;
  const double cdf = 0.5 * std::erfc(-z / std::numbers::sqrt2);
  const double pdf = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
  return delta * cdf + sigma * pdf;
}

Trace sample_phase(const BootstrapConfig &cfg, std::size_t n_slots, const LossFn &loss) {
  if (cfg.sample_budget < 1) {
    throw std::invalid_argument("sample_budget must be >= 1");
  }
  Trace trace;
  trace.records.resize(cfg.sample_budget);
  par::for_chunks(cfg.sample_budget, 16, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t trial = begin; trial < end; ++trial) {
      auto rng = make_rng(cfg.seed, stream::kSamplePhase, trial);
      AngleVector angles = uniform_vector(n_slots, rng);
      double value;
      try {
        value = loss(angles);
      } catch (const std::exception &e) {
        throw std::runtime_error(fmt::format("loss evaluation failed for angles [{}]: {}",
                                             angles_to_string(angles), e.what()));
      }
      trace.records[trial] = TraceRecord{Phase::kSample, trial, std::move(angles), value};
    }
  });
  return trace;
}

BootstrapResult run_bootstrap_with_loss(const BootstrapConfig &cfg, std::size_t n_slots,
                                        const LossFn &loss) {
  BootstrapResult result;
  result.trace = sample_phase(cfg, n_slots, loss);

  std::vector<Observation> observations;
  observations.reserve(result.trace.records.size() + cfg.opt_iterations);
  std::set<AngleVector> evaluated;
  result.best_loss = std::numeric_limits<double>::infinity();
  for (const auto &rec : result.trace.records) {
    observations.push_back({rec.angles, rec.loss});
    evaluated.insert(rec.angles);
    if (rec.loss < result.best_loss) {
      result.best_loss = rec.loss;
      result.best_angles = rec.angles;
    }
  }

  for (std::uint64_t round = 0; round < cfg.opt_iterations; ++round) {
    const auto forest = fit_forest(observations, cfg.forest, substream_seed(cfg.seed, stream::kForest, round));
    auto rng = make_rng(cfg.seed, stream::kAcquire, round);
    AngleVector next =
        greedy_acquire(forest, evaluated, result.best_angles, cfg.pool_size, cfg.mutation_count, rng);
    double value;
    try {
      value = loss(next);
    } catch (const std::exception &e) {
      throw std::runtime_error(fmt::format("loss evaluation failed for angles [{}]: {}",
                                           angles_to_string(next), e.what()));
    }
    observations.push_back({next, value});
    evaluated.insert(next);
    if (value < result.best_loss) {
      result.best_loss = value;
      result.best_angles = next;
    }
    result.trace.records.push_back(TraceRecord{Phase::kOptimize, round, std::move(next), value});
  }
  return result;
}

BootstrapResult run_bootstrap(const BootstrapConfig &cfg, const AnsatzSpec &spec,
                              const PauliString &obs, const Dataset &data) {
  const LossFn loss = [&](const AngleVector &angles) {
    return mse_loss(angles, spec, obs, data);
  };
  return run_bootstrap_with_loss(cfg, angle_count(spec), loss);
}

void write_trace_jsonl(std::ostream &out, const Trace &t) {
  for (const auto &rec : t.records) {
    nlohmann::json line = {
        {"phase", rec.phase == Phase::kSample ? "sample" : "optimize"},
        {"iter", rec.iter},
        {"angles", rec.angles},
        {"loss", rec.loss},
    };
    out << line.dump() << '\n';
  }
}

void write_summary_json(std::ostream &out, const BootstrapConfig &cfg,
                        const BootstrapResult &result, const std::string &manifest_ref) {
  const TraceMetrics metrics = trace_metrics(result.trace);
  nlohmann::json summary = {
      {"min_loss", metrics.min_loss},
      {"sample_variance", metrics.sample_variance},
      {"variance_defined", metrics.variance_defined},
      {"best_angles", result.best_angles},
      {"best_loss", result.best_loss},
      {"config",
       {
           {"sample_budget", cfg.sample_budget},
           {"opt_iterations", cfg.opt_iterations},
           {"n_trees", cfg.forest.n_trees},
           {"min_leaf", cfg.forest.min_leaf},
           {"feature_subsample_fraction", cfg.forest.feature_subsample_fraction},
           {"pool_size", cfg.pool_size},
           {"mutation_count", cfg.mutation_count},
       }},
      {"seed", cfg.seed},
  };
  if (!manifest_ref.empty()) {
    summary["manifest"] = manifest_ref;
  }
  out << summary.dump(2) << '\n';
}

}  // namespace stabkit
