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

// Batch experiment driver. Every subcommand is deterministic under fixed
// flags and seed, and every file-producing run writes a RunManifest next to
// its outputs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "manifest.hpp"
#include "stabkit/bootstrap.hpp"
#include "stabkit/clifford.hpp"
#include "stabkit/dataset.hpp"
#include "stabkit/parallel.hpp"
#include "stabkit/prob.hpp"
#include "stabkit/validate.hpp"
#include "stabkit/version.hpp"

using namespace stabkit;

namespace {

std::vector<std::size_t> parse_size_list(const std::string &text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stoul(item));
  }
  return out;
}

std::vector<double> parse_double_list(const std::string &text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(std::stod(item));
  }
  return out;
}

void apply_thread_settings(int threads_flag) {
  if (threads_flag > 0) {
    par::set_thread_count(static_cast<std::size_t>(threads_flag));
    return;
  }
  if (const char *env = std::getenv("STABKIT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) {
      par::set_thread_count(static_cast<std::size_t>(v));
    }
  }
}

void dump_circuit_to(const std::string &path, const Circuit &c) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error(fmt::format("cannot open '{}'", path));
  }
  dump_circuit(out, c);
}

// ---------------------------------------------------------------- theorem-check

int run_theorem_check(std::size_t n_max, std::size_t layers, const std::string &out_path,
                      const std::string &variant_name) {
  if (layers != 1) {
    std::cerr << "theorem-check: the closed forms are single-layer statements; --layers must be 1\n";
    return 2;
  }
  const auto variant = chain_variant_from_string(variant_name);
  cli::RunManifest manifest;
  manifest.subcommand = "theorem-check";
  manifest.started_at = cli::iso8601_now();
  manifest.parameters = {{"n_max", n_max}, {"layers", layers}, {"convention", variant_name}};

  std::ostringstream csv;
  csv << "n,observable,ent,total,plus,minus,zero,theory_p,ok\n";
  bool all_ok = true;
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (auto kind : {ObservableKind::kZString, ObservableKind::kXString}) {
      for (auto ent : {Entanglement::kLinear, Entanglement::kReverseLinear}) {
        const auto obs = PauliString::domain_wall(n, kind == ObservableKind::kXString ? 1.0 : 0.0);
        const AnsatzSpec spec{n, 1, ent};

        // Same enumeration as prob-lab but honoring the debug convention.
        Circuit circuit = build_ansatz_circuit(spec, AngleVector(n, 0), variant);
        std::vector<std::size_t> pos;
        for (std::size_t i = 0; i < circuit.gates().size(); ++i) {
          if (circuit.gates()[i].kind == GateKind::kRyQuarter) pos.push_back(i);
        }
        PauliString scratch(n);
        OutcomeCounts counts;
        counts.total = std::uint64_t{1} << (2 * n);
        for (std::uint64_t v = 0; v < counts.total; ++v) {
          for (std::size_t s = 0; s < n; ++s) {
            circuit.mutable_gates()[pos[s]].b = static_cast<std::uint32_t>((v >> (2 * s)) & 3u);
          }
          const int r = expectation_heisenberg(circuit, obs, scratch);
          if (r == 1) ++counts.plus_one;
          else if (r == -1) ++counts.minus_one;
          else ++counts.zero;
        }

        const auto theory = theory_probability(n, kind, ent);
        const std::uint64_t expected = counts.total >> theory.log2_den;
        const bool ok = counts.plus_one == expected && counts.minus_one == expected &&
                        counts.zero == counts.total - 2 * expected;
        all_ok = all_ok && ok;
        csv << fmt::format("{},{},{},{},{},{},{},{:.17g},{}\n", n,
                           kind == ObservableKind::kXString ? "X" : "Z", to_string(ent),
                           counts.total, counts.plus_one, counts.minus_one, counts.zero,
                           theory.value(), ok ? 1 : 0);
      }
    }
  }

  manifest.finished_at = cli::iso8601_now();
  if (!out_path.empty()) {
    const std::string manifest_path = manifest.path_for(out_path);
    std::ofstream out(out_path);
    out << "# manifest: " << manifest_path << '\n' << csv.str();
    manifest.outputs = {out_path};
    manifest.write(manifest_path);
  } else {
    std::cout << csv.str();
  }
  if (!all_ok) {
    std::cerr << fmt::format("theorem-check: mismatch against the closed forms (convention '{}')\n",
                             variant_name);
  }
  return all_ok ? 0 : 1;
}

// ---------------------------------------------------------------- prob-scan

int run_prob_scan(const std::string &n_list, const std::string &r_list, std::size_t layers,
                  const std::string &ent_name, std::uint64_t samples, std::uint64_t seed,
                  const std::string &out_path, const std::string &dump_path) {
  const auto ns = parse_size_list(n_list);
  const auto rs = parse_double_list(r_list);
  const auto ent = entanglement_from_string(ent_name);

  cli::RunManifest manifest;
  manifest.subcommand = "prob-scan";
  manifest.seed = seed;
  manifest.started_at = cli::iso8601_now();
  manifest.parameters = {{"n_list", ns},       {"r_list", rs}, {"layers", layers},
                         {"ent", ent_name},    {"samples", samples}};

  if (!dump_path.empty() && !ns.empty()) {
    const AnsatzSpec spec{ns.front(), layers, ent};
    dump_circuit_to(dump_path, build_ansatz_circuit(spec, AngleVector(angle_count(spec), 0)));
  }

  const auto points = scan(ns, rs, layers, ent, samples, seed);

  const std::string manifest_path = manifest.path_for(out_path);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << fmt::format("prob-scan: cannot open '{}'\n", out_path);
    return 2;
  }
  out << "# manifest: " << manifest_path << '\n';
  write_scan_csv(out, points, layers, ent);
  out.close();

  manifest.finished_at = cli::iso8601_now();
  manifest.outputs = {out_path};
  if (!dump_path.empty()) manifest.outputs.push_back(dump_path);
  manifest.write(manifest_path);
  return 0;
}

// ---------------------------------------------------------------- gen-data

int run_gen_data(std::size_t n_samples, std::size_t n_features, double class_sep,
                 double informative_fraction, std::uint64_t seed, const std::string &out_path) {
  cli::RunManifest manifest;
  manifest.subcommand = "gen-data";
  manifest.seed = seed;
  manifest.started_at = cli::iso8601_now();
  manifest.parameters = {{"samples", n_samples},
                         {"features", n_features},
                         {"class_sep", class_sep},
                         {"informative_fraction", informative_fraction}};

  const auto data =
      generate_classification(n_samples, n_features, class_sep, informative_fraction, seed);
  const std::string manifest_path = manifest.path_for(out_path);
  std::ofstream out(out_path);
  if (!out) {
    std::cerr << fmt::format("gen-data: cannot open '{}'\n", out_path);
    return 2;
  }
  out << "# manifest: " << manifest_path << '\n';
  write_dataset(out, data);
  out.close();

  manifest.finished_at = cli::iso8601_now();
  manifest.outputs = {out_path};
  manifest.write(manifest_path);
  return 0;
}

// ---------------------------------------------------------------- bootstrap

int run_bootstrap_cmd(const std::string &data_path, const std::string &ansatz_descriptor_text,
                      std::size_t layers, const std::string &ent_name, const std::string &obs_text,
                      double obs_r, BootstrapConfig cfg, const std::string &out_prefix,
                      const std::string &dump_path) {
  std::ifstream in(data_path);
  if (!in) {
    std::cerr << fmt::format("bootstrap: cannot open dataset '{}'\n", data_path);
    return 2;
  }
  const Dataset data = read_dataset(in);
  const std::size_t n = data.n_features();
  AnsatzSpec spec{n, layers, entanglement_from_string(ent_name)};
  if (!ansatz_descriptor_text.empty()) {
    spec = parse_ansatz_descriptor(ansatz_descriptor_text);
    if (spec.n_qubits != n) {
      std::cerr << fmt::format("bootstrap: ansatz descriptor has n={} but the dataset has {} features\n",
                               spec.n_qubits, n);
      return 2;
    }
  }
  const PauliString obs =
      obs_text.empty() ? PauliString::domain_wall(n, obs_r) : PauliString::parse(obs_text);

  cli::RunManifest manifest;
  manifest.subcommand = "bootstrap";
  manifest.seed = cfg.seed;
  manifest.started_at = cli::iso8601_now();
  manifest.parameters = {{"data", data_path},
                         {"ansatz", ansatz_descriptor(spec)},
                         {"observable", obs.str()},
                         {"sample_budget", cfg.sample_budget},
                         {"opt_iterations", cfg.opt_iterations},
                         {"n_trees", cfg.forest.n_trees},
                         {"min_leaf", cfg.forest.min_leaf},
                         {"feature_subsample_fraction", cfg.forest.feature_subsample_fraction},
                         {"pool_size", cfg.pool_size},
                         {"mutation_count", cfg.mutation_count}};

  const auto result = run_bootstrap(cfg, spec, obs, data);

  const std::string trace_path = out_prefix + ".trace.jsonl";
  const std::string summary_path = out_prefix + ".summary.json";
  const std::string manifest_path = out_prefix + ".manifest.json";
  std::ofstream trace_out(trace_path);
  write_trace_jsonl(trace_out, result.trace);
  std::ofstream summary_out(summary_path);
  write_summary_json(summary_out, cfg, result, manifest_path);

  if (!dump_path.empty()) {
    dump_circuit_to(dump_path, build_ansatz_circuit(spec, result.best_angles));
  }

  manifest.finished_at = cli::iso8601_now();
  manifest.outputs = {trace_path, summary_path};
  if (!dump_path.empty()) manifest.outputs.push_back(dump_path);
  manifest.write(manifest_path);

  const auto metrics = trace_metrics(result.trace);
  std::cout << fmt::format("best_loss={:.17g} sample_variance={:.17g}\n", result.best_loss,
                           metrics.sample_variance);
  return 0;
}

// ---------------------------------------------------------------- oracle-validate

int run_oracle_validate(std::size_t circuits, std::size_t n_max, std::size_t gates,
                        std::uint64_t seed) {
  const auto stats = validate_oracle_agreement(circuits, n_max, gates, seed);
  std::cout << fmt::format(
      "circuits={} path_mismatches={} dense_mismatches={} non_integral={}\n", stats.circuits,
      stats.path_mismatches, stats.dense_mismatches, stats.non_integral);
  return stats.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- exponent-fit

int run_exponent_fit(double p_hat, std::size_t n, bool from_theory, const std::string &kind_name,
                     const std::string &ent_name, const std::string &out_path) {
  double p = p_hat;
  if (from_theory) {
    const auto kind = kind_name == "x" ? ObservableKind::kXString : ObservableKind::kZString;
    p = theory_probability(n, kind, entanglement_from_string(ent_name)).value();
  }
  const auto fit = fit_exponent(p, n);
  nlohmann::json j = {{"n", fit.n},
                      {"p_hat", fit.p_hat},
                      {"nu", fit.nu},
                      {"noise_excursion", fit.noise_excursion}};
  if (!out_path.empty()) {
    cli::RunManifest manifest;
    manifest.subcommand = "exponent-fit";
    manifest.started_at = manifest.finished_at = cli::iso8601_now();
    manifest.parameters = {{"p_hat", p}, {"n", n}, {"from_theory", from_theory}};
    manifest.outputs = {out_path};
    const std::string manifest_path = manifest.path_for(out_path);
    j["manifest"] = manifest_path;
    std::ofstream out(out_path);
    out << j.dump(2) << '\n';
    manifest.write(manifest_path);
  } else {
    std::cout << j.dump() << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{fmt::format("stabkit {} - Clifford sampling and bootstrap experiments",
                           std::string(kVersion))};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: hardware, env STABKIT_THREADS)");
  app.set_version_flag("--version", std::string(kVersion));

  // theorem-check
  auto *tc = app.add_subcommand("theorem-check",
                                "exact enumeration against the closed-form probabilities");
  std::size_t tc_n_max = 6;
  std::size_t tc_layers = 1;
  std::string tc_out;
  std::string tc_convention = "frozen";
  tc->add_option("--n-max", tc_n_max, "largest qubit count to enumerate")->capture_default_str();
  tc->add_option("--layers", tc_layers, "ansatz layers (must be 1)")->capture_default_str();
  tc->add_option("--out", tc_out, "CSV output path (stdout when omitted)");
  tc->add_option("--debug-convention", tc_convention,
                 "chain wiring: frozen|swapped|mirrored|swapped-mirrored")
      ->capture_default_str();

  // prob-scan
  auto *ps = app.add_subcommand("prob-scan", "Monte Carlo sweep over an (n, r) grid");
  std::string ps_n_list;
  std::string ps_r_list = "0,0.25,0.5,0.75,1";
  std::size_t ps_layers = 1;
  std::string ps_ent = "revlinear";
  std::uint64_t ps_samples = 100000;
  std::uint64_t ps_seed = 0;
  std::string ps_out;
  std::string ps_dump;
  ps->add_option("--n-list", ps_n_list, "comma-separated qubit counts")->required();
  ps->add_option("--r-list", ps_r_list, "comma-separated X fractions")->capture_default_str();
  ps->add_option("--layers", ps_layers, "ansatz layers")->capture_default_str();
  ps->add_option("--ent", ps_ent, "linear|revlinear")->capture_default_str();
  ps->add_option("--samples", ps_samples, "Monte Carlo samples per grid point")
      ->capture_default_str();
  ps->add_option("--seed", ps_seed, "base seed")->capture_default_str();
  ps->add_option("--out", ps_out, "CSV output path")->required();
  ps->add_option("--dump-circuit", ps_dump, "write the first grid point's circuit (zero angles)");

  // gen-data
  auto *gd = app.add_subcommand("gen-data", "generate a discretized classification dataset");
  std::size_t gd_samples = 100;
  std::size_t gd_features = 20;
  double gd_sep = 1.0;
  double gd_frac = 0.5;
  std::uint64_t gd_seed = 0;
  std::string gd_out;
  gd->add_option("--samples", gd_samples, "dataset rows")->capture_default_str();
  gd->add_option("--features", gd_features, "features (= qubits downstream)")
      ->capture_default_str();
  gd->add_option("--class-sep", gd_sep, "cluster separation")->capture_default_str();
  gd->add_option("--informative-fraction", gd_frac, "fraction of informative features")
      ->capture_default_str();
  gd->add_option("--seed", gd_seed, "generator seed")->capture_default_str();
  gd->add_option("--out", gd_out, "output path")->required();

  // bootstrap
  auto *bs = app.add_subcommand("bootstrap", "two-phase stabilizer bootstrap over a dataset");
  std::string bs_data;
  std::size_t bs_layers = 3;
  std::string bs_ent = "revlinear";
  std::string bs_obs;
  double bs_r = 0.0;
  BootstrapConfig bs_cfg;
  std::string bs_out;
  std::string bs_dump;
  std::string bs_ansatz;
  bs->add_option("--data", bs_data, "dataset file from gen-data")->required();
  bs->add_option("--ansatz", bs_ansatz,
                 "full descriptor n=<int>,layers=<int>,ent=linear|revlinear "
                 "(n must match the dataset; overrides --layers/--ent)");
  bs->add_option("--layers", bs_layers, "ansatz layers")->capture_default_str();
  bs->add_option("--ent", bs_ent, "linear|revlinear")->capture_default_str();
  bs->add_option("--obs", bs_obs, "observable letters, e.g. ZZZZ or -ZZXX (default: Z string)");
  bs->add_option("--r", bs_r, "domain-wall X fraction when --obs is omitted")
      ->capture_default_str();
  bs->add_option("--sample-budget", bs_cfg.sample_budget, "sampling-phase evaluations")
      ->capture_default_str();
  bs->add_option("--opt-iterations", bs_cfg.opt_iterations, "optimization rounds")
      ->capture_default_str();
  bs->add_option("--trees", bs_cfg.forest.n_trees, "forest size")->capture_default_str();
  bs->add_option("--min-leaf", bs_cfg.forest.min_leaf, "minimum observations per leaf")
      ->capture_default_str();
  bs->add_option("--feature-subsample", bs_cfg.forest.feature_subsample_fraction,
                 "feature fraction per split")
      ->capture_default_str();
  bs->add_option("--pool", bs_cfg.pool_size, "acquisition pool size")->capture_default_str();
  bs->add_option("--mutations", bs_cfg.mutation_count, "incumbent mutations per acquisition")
      ->capture_default_str();
  bs->add_option("--seed", bs_cfg.seed, "run seed")->capture_default_str();
  bs->add_option("--out", bs_out, "output prefix (.trace.jsonl, .summary.json)")->required();
  bs->add_option("--dump-circuit", bs_dump, "write the best-angle ansatz circuit");

  // oracle-validate
  auto *ov = app.add_subcommand("oracle-validate",
                                "cross-check Heisenberg, tableau and dense paths");
  std::size_t ov_circuits = 500;
  std::size_t ov_n_max = 8;
  std::size_t ov_gates = 40;
  std::uint64_t ov_seed = 0;
  ov->add_option("--circuits", ov_circuits, "random circuits")->capture_default_str();
  ov->add_option("--n-max", ov_n_max, "max qubits (<= 12)")->capture_default_str();
  ov->add_option("--gates", ov_gates, "gates per circuit")->capture_default_str();
  ov->add_option("--seed", ov_seed, "seed")->capture_default_str();

  // exponent-fit
  auto *ef = app.add_subcommand("exponent-fit", "pointwise critical-exponent fit");
  double ef_p = 0.0;
  std::size_t ef_n = 0;
  bool ef_theory = false;
  std::string ef_kind = "z";
  std::string ef_ent = "revlinear";
  std::string ef_out;
  ef->add_option("--p-hat", ef_p, "probability estimate");
  ef->add_option("--n", ef_n, "qubit count")->required();
  ef->add_flag("--theory", ef_theory, "fit the closed-form value instead of --p-hat");
  ef->add_option("--kind", ef_kind, "z|x (with --theory)")->capture_default_str();
  ef->add_option("--ent", ef_ent, "linear|revlinear (with --theory)")->capture_default_str();
  ef->add_option("--out", ef_out, "JSON output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);
  apply_thread_settings(threads);

  try {
    if (tc->parsed()) {
      return run_theorem_check(tc_n_max, tc_layers, tc_out, tc_convention);
    }
    if (ps->parsed()) {
      return run_prob_scan(ps_n_list, ps_r_list, ps_layers, ps_ent, ps_samples, ps_seed, ps_out,
                           ps_dump);
    }
    if (gd->parsed()) {
      return run_gen_data(gd_samples, gd_features, gd_sep, gd_frac, gd_seed, gd_out);
    }
    if (bs->parsed()) {
      return run_bootstrap_cmd(bs_data, bs_ansatz, bs_layers, bs_ent, bs_obs, bs_r, bs_cfg, bs_out,
                               bs_dump);
    }
    if (ov->parsed()) {
      return run_oracle_validate(ov_circuits, ov_n_max, ov_gates, ov_seed);
    }
    if (ef->parsed()) {
      return run_exponent_fit(ef_p, ef_n, ef_theory, ef_kind, ef_ent, ef_out);
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
