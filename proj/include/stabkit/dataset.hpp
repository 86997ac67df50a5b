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

struct DatasetParams {
  std::size_t n_samples = 0;
  std::size_t n_features = 0;
  double class_sep = 1.0;
  double informative_fraction = 1.0;
  std::uint64_t seed = 0;
  /// Labels are stored as -1/+1 so predictions in {-1, 0, 1} need no
  /// rescaling inside the squared error.
  std::string label_convention = "pm1";
};

/// Discretized classification data: features are encoding levels in
/// {0,1,2,3}, labels are -1/+1 and balanced to within one sample.
class Dataset {
 public:
  Dataset() = default;
  Dataset(DatasetParams params, std::vector<std::uint8_t> levels, std::vector<std::int8_t> labels);

  std::size_t n_samples() const { return params_.n_samples; }
  std::size_t n_features() const { return params_.n_features; }
  const DatasetParams &params() const { return params_; }

  std::uint8_t level(std::size_t i, std::size_t j) const {
    return levels_[i * params_.n_features + j];
  }
  std::span<const std::uint8_t> row(std::size_t i) const {
    return {levels_.data() + i * params_.n_features, params_.n_features};
  }
  std::int8_t label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::uint8_t> &levels() const { return levels_; }
  const std::vector<std::int8_t> &labels() const { return labels_; }

 private:
  DatasetParams params_;
  std::vector<std::uint8_t> levels_;  // row-major N x d
  std::vector<std::int8_t> labels_;
};

/// Two Gaussian clusters at +-class_sep along the informative dimensions,
/// unit-variance noise elsewhere, followed by per-feature rank (quartile)
/// binning into the four encoding levels. Fully determined by the seed; the
/// normal sampler is hand-rolled (Box-Muller over mt19937_64) so the same
/// seed gives the same bits on every platform.
Dataset generate_classification(std::size_t n_samples, std::size_t n_features, double class_sep,
                                double informative_fraction, std::uint64_t seed);

/// MSE over the dataset: y_hat_i is the circuit expectation of `obs` after
/// encoding row i and applying the ansatz. Terms are integers in {0, 1, 4},
/// summed exactly, so the result is identical for any worker count.
double mse_loss(const AngleVector &angles, const AnsatzSpec &spec, const PauliString &obs,
                const Dataset &data);

/// File format: one JSON header line, then CSV rows "label,f1,...,fd".
void write_dataset(std::ostream &out, const Dataset &data);
Dataset read_dataset(std::istream &in);

}  // namespace stabkit
