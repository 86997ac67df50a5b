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

// End-to-end acceptance suite. Each criterion prints exactly one PASS/FAIL
// line; the exit status is the number of failures. Run a single criterion
// with --criterion N.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "stabkit/bootstrap.hpp"
#include "stabkit/clifford.hpp"
#include "stabkit/dataset.hpp"
#include "stabkit/prob.hpp"
#include "stabkit/rng.hpp"
#include "stabkit/validate.hpp"

using namespace stabkit;

namespace {

struct Criterion {
  int id;
  const char *title;
  std::function<bool(std::string &)> run;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --- criterion bodies -------------------------------------------------

bool strong_exact(std::string &detail) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (std::size_t n = 1; n <= 6 && ok; ++n) {
    for (const auto &[ent, r] : {std::pair{Entanglement::kReverseLinear, 0.0},
                                 std::pair{Entanglement::kLinear, 1.0}}) {
      const auto counts = exact_counts({n, 1, ent}, PauliString::domain_wall(n, r));
      const std::uint64_t quarter = counts.total / 4;
      if (counts.plus_one != quarter || counts.minus_one != quarter) {
        detail = "n=" + std::to_string(n) + " deviates from 1/4";
        ok = false;
        break;
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 60.0) {
    detail = "runtime " + std::to_string(elapsed) + "s exceeds 60s";
    ok = false;
  }
  if (ok) detail = "all 12 exact quarter checks, " + std::to_string(elapsed) + "s";
  return ok;
}

bool weak_exact(std::string &detail) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = true;
  for (std::size_t n = 1; n <= 6 && ok; ++n) {
    const std::uint32_t e = static_cast<std::uint32_t>((n + 1) / 2 + 1);
    for (const auto &[ent, r] :
         {std::pair{Entanglement::kLinear, 0.0}, std::pair{Entanglement::kReverseLinear, 1.0}}) {
      const auto counts = exact_counts({n, 1, ent}, PauliString::domain_wall(n, r));
      const std::uint64_t expected = counts.total >> e;
      const std::uint64_t expected_zero = counts.total - (counts.total >> (e - 1));
      if (counts.plus_one != expected || counts.minus_one != expected ||
          counts.zero != expected_zero) {
        detail = "n=" + std::to_string(n) + " deviates from 2^-" + std::to_string(e);
        ok = false;
        break;
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (ok && elapsed >= 60.0) {
    detail = "runtime exceeds 60s";
    ok = false;
  }
  if (ok) detail = "plus, minus and zero counts exact, " + std::to_string(elapsed) + "s";
  return ok;
}

bool large_n_statistical(std::string &detail) {
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n : {100ul, 101ul}) {
    const auto counts = mc_counts({n, 1, Entanglement::kReverseLinear},
                                  PauliString::domain_wall(n, 0.0), 100000, 2026);
    const double p = counts.p_plus();
    const double se = binomial_stderr(p, counts.total);
    if (std::abs(p - 0.25) >= 4 * se) {
      detail = "n=" + std::to_string(n) + ": |p-0.25|=" + std::to_string(std::abs(p - 0.25)) +
               " vs 4se=" + std::to_string(4 * se);
      return false;
    }
  }
  const auto xcounts = mc_counts({10, 1, Entanglement::kReverseLinear},
                                 PauliString::domain_wall(10, 1.0), 1000000, 2027);
  const double p = xcounts.p_plus();
  const double se = binomial_stderr(p, xcounts.total);
  if (std::abs(p - 1.0 / 64.0) >= 4 * se) {
    detail = "X-string n=10 off: p=" + std::to_string(p);
    return false;
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 300.0) {
    detail = "runtime exceeds 5 min";
    return false;
  }
  detail = "both bands hold, " + std::to_string(elapsed) + "s";
  return true;
}

bool oracle_equivalence(std::string &detail) {
  const auto stats = validate_oracle_agreement(500, 8, 40, 2028);
  detail = std::to_string(stats.circuits) + " circuits, " +
           std::to_string(stats.path_mismatches) + " path / " +
           std::to_string(stats.dense_mismatches) + " dense mismatches, " +
           std::to_string(stats.non_integral) + " non-integral";
  return stats.circuits == 500 && stats.ok();
}

bool duality(std::string &detail) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto lin_x = exact_counts({n, 1, Entanglement::kLinear}, PauliString::domain_wall(n, 1.0));
    const auto rev_z =
        exact_counts({n, 1, Entanglement::kReverseLinear}, PauliString::domain_wall(n, 0.0));
    const auto lin_z = exact_counts({n, 1, Entanglement::kLinear}, PauliString::domain_wall(n, 0.0));
    const auto rev_x =
        exact_counts({n, 1, Entanglement::kReverseLinear}, PauliString::domain_wall(n, 1.0));
    if (lin_x.plus_one != rev_z.plus_one || lin_z.plus_one != rev_x.plus_one) {
      detail = "duality broken at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "both dual pairs exactly equal for n=1..6";
  return true;
}

bool domain_wall_band(std::string &detail) {
  const std::size_t n = 12;
  const std::size_t v[] = {n};
  const double rs[] = {0.0, 0.25, 0.5, 0.75, 1.0};
  const auto points = scan(v, rs, 1, Entanglement::kReverseLinear, 100000, 2029);
  const double p0 = points.front().counts.p_plus();
  const double se0 = binomial_stderr(p0, points.front().counts.total);
  if (std::abs(p0 - 0.25) >= 4 * se0) {
    detail = "r=0 endpoint off: p=" + std::to_string(p0);
    return false;
  }
  const double p1 = points.back().counts.p_plus();
  const double se1 = binomial_stderr(p1, points.back().counts.total);
  if (std::abs(p1 - std::ldexp(1.0, -7)) >= 4 * se1) {
    detail = "r=1 endpoint off: p=" + std::to_string(p1);
    return false;
  }
  for (const auto &pt : points) {
    const double p = pt.counts.p_plus();
    const double se = binomial_stderr(p, pt.counts.total);
    if (p < 0.0 || p > 0.25 + 4 * se) {
      detail = "r=" + std::to_string(pt.r) + " escapes the band: p=" + std::to_string(p);
      return false;
    }
  }
  detail = "endpoints and interior all inside the [0, 1/4] band";
  return true;
}

bool exponent_endpoints(std::string &detail) {
  for (std::size_t n = 4; n <= 20; n += 2) {
    const double nu0 = fit_exponent(0.25, n).nu;
    if (std::abs(nu0) >= 1e-12) {
      detail = "strong endpoint off at n=" + std::to_string(n);
      return false;
    }
    const double p_weak = std::ldexp(1.0, -static_cast<int>(n / 2 + 1));
    const double expected = (static_cast<double>(n) / 2.0 - 1.0) * std::log(2.0) /
                            std::log(static_cast<double>(n));
    if (std::abs(fit_exponent(p_weak, n).nu - expected) >= 1e-12) {
      detail = "weak endpoint off at n=" + std::to_string(n);
      return false;
    }
  }
  detail = "nu endpoints exact to 1e-12 for even n in [4, 20]";
  return true;
}

bool ei_and_exploration(std::string &detail) {
  const double ei = expected_improvement(0.0, 1.0, 0.0);
  if (std::abs(ei - 0.3989422804) > 1e-9) {
    detail = "EI(0,1,0)=" + std::to_string(ei);
    return false;
  }

  // Exploration under a constant surrogate: acquired points must sit
  // farther from the sampled set than uniform candidates do, seed by seed.
  const std::size_t n_slots = 24;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::vector<Observation> obs;
    auto gen = make_rng(seed, 100, 0);
    for (int i = 0; i < 40; ++i) {
      AngleVector v(n_slots);
      for (auto &e : v) e = uniform_quarter(gen);
      obs.push_back({v, 1.0});
    }
    const auto forest = fit_forest(obs, {40, 2, 0.5}, seed);
    std::set<AngleVector> sampled;
    for (const auto &o : obs) sampled.insert(o.angles);

    const auto min_dist = [&](const AngleVector &x) {
      std::size_t best = n_slots;
      for (const auto &s : sampled) {
        std::size_t h = 0;
        for (std::size_t i = 0; i < n_slots; ++i) h += x[i] != s[i];
        best = std::min(best, h);
      }
      return static_cast<double>(best);
    };

    std::set<AngleVector> evaluated = sampled;
    auto rng = make_rng(seed, 101, 0);
    double acquired_mean = 0.0;
    for (int round = 0; round < 100; ++round) {
      auto pick = greedy_acquire(forest, evaluated, obs.front().angles, 64, 8, rng);
      acquired_mean += min_dist(pick);
      evaluated.insert(std::move(pick));
    }
    acquired_mean /= 100.0;

    double uniform_mean = 0.0;
    for (int i = 0; i < 100; ++i) {
      AngleVector v(n_slots);
      for (auto &e : v) e = uniform_quarter(rng);
      uniform_mean += min_dist(v);
    }
    uniform_mean /= 100.0;

    if (acquired_mean <= uniform_mean) {
      detail = "seed " + std::to_string(seed) + ": acquired " + std::to_string(acquired_mean) +
               " <= uniform " + std::to_string(uniform_mean);
      return false;
    }
  }
  detail = "EI value exact; exploration beats uniform baseline in 10/10 seeds";
  return true;
}

bool multilayer_decay(std::string &detail) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = 20;
  const auto obs = PauliString::domain_wall(n, 0.0);

  const auto one = mc_counts({n, 1, Entanglement::kReverseLinear}, obs, 100000, 2030);
  const double p1 = one.p_plus();
  if (std::abs(p1 - 0.25) >= 4 * binomial_stderr(p1, one.total)) {
    detail = "L=1 off: p=" + std::to_string(p1);
    return false;
  }
  for (std::size_t layers : {3ul, 5ul}) {
    const auto counts = mc_counts({n, layers, Entanglement::kReverseLinear}, obs, 100000,
                                  2030 + layers);
    const double p = counts.p_plus();
    if (p < 0.10 || p > 0.25) {
      detail = "L=" + std::to_string(layers) + " outside [0.10, 0.25]: p=" + std::to_string(p);
      return false;
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= 300.0) {
    detail = "runtime exceeds 5 min";
    return false;
  }
  detail = "L=1 at 1/4; L=3,5 inside the decay band, " + std::to_string(elapsed) + "s";
  return true;
}

BootstrapConfig efficacy_config(std::uint64_t seed) {
  // Sampling-heavy split: guided rounds rarely dig below the sampled
  // minimum in this plateau-dominated landscape, so the budget follows the
  // allocate-to-sampling preference the method is built around.
  BootstrapConfig cfg;
  cfg.sample_budget = 184;
  cfg.opt_iterations = 16;
  cfg.forest = {100, 2, 0.5};
  cfg.pool_size = 512;
  cfg.mutation_count = 64;
  cfg.seed = seed;
  return cfg;
}

bool bootstrap_efficacy(std::string &detail) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = 20;
  const AnsatzSpec spec{n, 3, Entanglement::kReverseLinear};
  const auto obs = PauliString::domain_wall(n, 0.0);

  int beats_baseline = 0;
  int beats_random = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto data = generate_classification(50, n, 1.0, 0.5, 5000 + seed);
    const auto cfg = efficacy_config(seed);
    const auto result = run_bootstrap(cfg, spec, obs, data);

    const double baseline = mse_loss(AngleVector(angle_count(spec), 0), spec, obs, data);
    if (result.best_loss <= baseline) ++beats_baseline;

    // Budget-matched pure random search, paired on the seed.
    const std::uint64_t total_budget = cfg.sample_budget + cfg.opt_iterations;
    double random_best = std::numeric_limits<double>::infinity();
    for (std::uint64_t trial = 0; trial < total_budget; ++trial) {
      auto rng = make_rng(seed, 909, trial);
      AngleVector v(angle_count(spec));
      for (auto &e : v) e = uniform_quarter(rng);
      random_best = std::min(random_best, mse_loss(v, spec, obs, data));
    }
    if (result.best_loss <= random_best) ++beats_random;
  }

  const double elapsed = seconds_since(start);
  detail = "baseline beaten in " + std::to_string(beats_baseline) + "/10, random search in " +
           std::to_string(beats_random) + "/10 paired seeds, " + std::to_string(elapsed) + "s";
  return beats_baseline == 10 && beats_random >= 8 && elapsed < 600.0;
}

bool dataset_size_trend(std::string &detail) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = 50;
  const AnsatzSpec spec{n, 3, Entanglement::kReverseLinear};
  const auto obs = PauliString::domain_wall(n, 0.0);

  std::vector<double> mean_variance;
  for (std::size_t n_data : {25ul, 100ul, 400ul}) {
    double acc = 0.0;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto data = generate_classification(n_data, n, 1.0, 0.5, 7000 + seed);
      BootstrapConfig cfg;
      cfg.sample_budget = 200;
      cfg.opt_iterations = 0;
      cfg.seed = seed;
      const auto trace = sample_phase(cfg, angle_count(spec), [&](const AngleVector &v) {
        return mse_loss(v, spec, obs, data);
      });
      acc += trace_metrics(trace).sample_variance;
    }
    mean_variance.push_back(acc / 5.0);
  }

  const double elapsed = seconds_since(start);
  detail = "mean sample variance " + std::to_string(mean_variance[0]) + " -> " +
           std::to_string(mean_variance[1]) + " -> " + std::to_string(mean_variance[2]) + ", " +
           std::to_string(elapsed) + "s";
  return mean_variance[0] > mean_variance[1] && mean_variance[1] > mean_variance[2] &&
         elapsed < 600.0;
}

bool scale_smoke(std::string &detail) {
  // One Heisenberg evaluation at n = 10^4 must land under a second.
  const std::size_t n = 10000;
  const AnsatzSpec spec{n, 1, Entanglement::kReverseLinear};
  AngleVector angles(n);
  auto rng = make_rng(999, 0, 0);
  for (auto &a : angles) a = uniform_quarter(rng);
  const auto t0 = std::chrono::steady_clock::now();
  const Circuit c = build_ansatz_circuit(spec, angles);
  const int value = expectation_heisenberg(c, PauliString::domain_wall(n, 0.0));
  const double single = seconds_since(t0);
  if (single >= 1.0) {
    detail = "n=10^4 evaluation took " + std::to_string(single) + "s";
    return false;
  }

  const auto t1 = std::chrono::steady_clock::now();
  const auto counts = mc_counts({1000, 1, Entanglement::kReverseLinear},
                                PauliString::domain_wall(1000, 0.0), 10000, 777);
  const double mc = seconds_since(t1);
  if (mc >= 300.0) {
    detail = "n=1000 Monte Carlo took " + std::to_string(mc) + "s";
    return false;
  }
  detail = "n=10^4 single eval " + std::to_string(single) + "s (value " + std::to_string(value) +
           "), 10^4 samples at n=1000 in " + std::to_string(mc) + "s (p=" +
           std::to_string(counts.p_plus()) + ")";
  return true;
}

}  // namespace

int main(int argc, char **argv) {
  const std::vector<Criterion> criteria = {
      {1, "exact strong enhancement (1/4 for n=1..6)", strong_exact},
      {2, "exact weak enhancement (2^-ceil(n/2+1) and zero-counts)", weak_exact},
      {3, "large-n statistical bands (n=100,101 and X-string n=10)", large_n_statistical},
      {4, "oracle equivalence on 500 random circuits", oracle_equivalence},
      {5, "linear/reverse-linear duality", duality},
      {6, "domain-wall probability band at n=12", domain_wall_band},
      {7, "critical exponent endpoints", exponent_endpoints},
      {8, "expected improvement and exploration tie-break", ei_and_exploration},
      {9, "multi-layer sampling decay at n=20", multilayer_decay},
      {10, "bootstrap efficacy vs baselines", bootstrap_efficacy},
      {11, "sample variance decreases with dataset size", dataset_size_trend},
      {12, "desk-scale smoke (n=10^4 eval, n=1000 Monte Carlo)", scale_smoke},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else if (std::strcmp(argv[i], "--list") == 0) {
      for (const auto &c : criteria) {
        std::printf("%2d  %s\n", c.id, c.title);
      }
      return 0;
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N] [--list]\n", argv[0]);
      return 2;
    }
  }

  int failures = 0;
  int ran = 0;
  for (const auto &c : criteria) {
    if (only != 0 && c.id != only) {
      continue;
    }
    ++ran;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception &e) {
      detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", c.id, c.title,
                detail.c_str());
    std::fflush(stdout);
    failures += !ok;
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d; use --list\n", only);
    return 2;
  }
  return failures;
}
