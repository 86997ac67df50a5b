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

#include "stabkit/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <fmt/format.h>
#include <json.hpp>

#include "stabkit/clifford.hpp"
#include "stabkit/parallel.hpp"
#include "stabkit/rng.hpp"

namespace stabkit {

Dataset::Dataset(DatasetParams params, std::vector<std::uint8_t> levels,
                 std::vector<std::int8_t> labels)
    : params_(std::move(params)), levels_(std::move(levels)), labels_(std::move(labels)) {
  if (levels_.size() != params_.n_samples * params_.n_features ||
      labels_.size() != params_.n_samples) {
    throw std::invalid_argument("dataset buffer sizes do not match the declared shape");
  }
  for (std::uint8_t v : levels_) {
    if (v > 3) {
      throw std::invalid_argument("feature level outside {0,1,2,3}");
    }
  }
  for (std::int8_t y : labels_) {
    if (y != -1 && y != 1) {
      throw std::invalid_argument("labels must be -1 or +1");
    }
  }
}

namespace {

// Box-Muller on explicit 53-bit uniforms; std::normal_distribution is
// implementation-defined and would break seed stability across platforms.
double standard_normal(std::mt19937_64 &rng) {
  double u1 = uniform_unit(rng);
  while (u1 <= 0.0) {
    u1 = uniform_unit(rng);
  }
  const double u2 = uniform_unit(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace

Dataset generate_classification(std::size_t n_samples, std::size_t n_features, double class_sep,
                                double informative_fraction, std::uint64_t seed) {
  if (n_samples < 2 || n_features < 1) {
    throw std::invalid_argument("need n_samples >= 2 and n_features >= 1");
  }
  if (!(informative_fraction > 0.0 && informative_fraction <= 1.0)) {
    throw std::invalid_argument(fmt::format("informative_fraction {} outside (0, 1]", informative_fraction));
  }
  const auto n_informative = std::min<std::size_t>(
      n_features,
      std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(
                                   informative_fraction * static_cast<double>(n_features)))));

  // Balanced labels: first half +1, rest -1 (odd N leaves one extra -1).
  std::vector<std::int8_t> labels(n_samples, -1);
  for (std::size_t i = 0; i < (n_samples + 1) / 2; ++i) {
    labels[i] = +1;
  }

  auto rng = make_rng(seed, stream::kDataset, 0);
  std::vector<double> raw(n_samples * n_features);
  for (std::size_t i = 0; i < n_samples; ++i) {
    for (std::size_t j = 0; j < n_features; ++j) {
      double mean = j < n_informative ? labels[i] * class_sep : 0.0;
      raw[i * n_features + j] = mean + standard_normal(rng);
    }
  }

  // Rank-based quartile binning per feature; all four levels occur.
  std::vector<std::uint8_t> levels(n_samples * n_features, 0);
  std::vector<std::size_t> order(n_samples);
  for (std::size_t j = 0; j < n_features; ++j) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return raw[a * n_features + j] < raw[b * n_features + j];
    });
    for (std::size_t rank = 0; rank < n_samples; ++rank) {
      levels[order[rank] * n_features + j] = static_cast<std::uint8_t>(rank * 4 / n_samples);
    }
  }

  DatasetParams params;
  params.n_samples = n_samples;
  params.n_features = n_features;
  params.class_sep = class_sep;
  params.informative_fraction = informative_fraction;
  params.seed = seed;
  return Dataset(std::move(params), std::move(levels), std::move(labels));
}

double mse_loss(const AngleVector &angles, const AnsatzSpec &spec, const PauliString &obs,
                const Dataset &data) {
  if (data.n_features() != spec.n_qubits) {
    throw std::invalid_argument(fmt::format("dataset features {} != ansatz qubits {}",
                                            data.n_features(), spec.n_qubits));
  }
  const Circuit ansatz = build_ansatz_circuit(spec, angles);
  const std::size_t n_rows = data.n_samples();

  std::vector<std::int64_t> partial(par::thread_count(), 0);
  par::for_chunks(n_rows, 512, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    PauliString scratch(spec.n_qubits);
    std::int64_t sum = 0;
    for (std::size_t i = begin; i < end; ++i) {
      const Circuit c = compose(encode_features(data.row(i)), ansatz);
      const int y_hat = expectation_heisenberg(c, obs, scratch);
      const int d = data.label(i) - y_hat;
      sum += d * d;  // 0, 1 or 4
    }
    partial[chunk] = sum;
  });

  std::int64_t total = 0;
  for (std::int64_t s : partial) {
    total += s;
  }
  return static_cast<double>(total) / static_cast<double>(n_rows);
}

void write_dataset(std::ostream &out, const Dataset &data) {
  nlohmann::json header = {
      {"n_samples", data.n_samples()},
      {"n_features", data.n_features()},
      {"seed", data.params().seed},
      {"class_sep", data.params().class_sep},
      {"informative_fraction", data.params().informative_fraction},
      {"label_convention", data.params().label_convention},
  };
  out << header.dump() << '\n';
  for (std::size_t i = 0; i < data.n_samples(); ++i) {
    out << static_cast<int>(data.label(i));
    for (std::size_t j = 0; j < data.n_features(); ++j) {
      out << ',' << static_cast<int>(data.level(i, j));
    }
    out << '\n';
  }
}

Dataset read_dataset(std::istream &in) {
  std::string line;
  // Leading '#' lines carry provenance (e.g. the manifest reference).
  do {
    if (!std::getline(in, line)) {
      throw std::runtime_error("empty dataset stream");
    }
  } while (line.empty() || line.front() == '#');
  const auto header = nlohmann::json::parse(line);
  DatasetParams params;
  params.n_samples = header.at("n_samples").get<std::size_t>();
  params.n_features = header.at("n_features").get<std::size_t>();
  params.seed = header.value("seed", std::uint64_t{0});
  params.class_sep = header.value("class_sep", 0.0);
  params.informative_fraction = header.value("informative_fraction", 1.0);
  params.label_convention = header.value("label_convention", std::string("pm1"));

  std::vector<std::uint8_t> levels;
  levels.reserve(params.n_samples * params.n_features);
  std::vector<std::int8_t> labels;
  labels.reserve(params.n_samples);
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::size_t pos = 0;
    bool first = true;
    std::size_t fields = 0;
    while (pos <= line.size()) {
      auto comma = line.find(',', pos);
      if (comma == std::string::npos) comma = line.size();
      const int v = std::stoi(line.substr(pos, comma - pos));
      if (first) {
        labels.push_back(static_cast<std::int8_t>(v));
        first = false;
      } else {
        levels.push_back(static_cast<std::uint8_t>(v));
        ++fields;
      }
      pos = comma + 1;
    }
    if (fields != params.n_features) {
      throw std::runtime_error(fmt::format("dataset row has {} features, header says {}",
                                           fields, params.n_features));
    }
  }
  if (labels.size() != params.n_samples) {
    throw std::runtime_error(fmt::format("dataset has {} rows, header says {}",
                                         labels.size(), params.n_samples));
  }
  return Dataset(std::move(params), std::move(levels), std::move(labels));
}

}  // namespace stabkit
