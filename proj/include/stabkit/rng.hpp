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
#include <random>

namespace stabkit {

// splitmix64 finalizer. Seeds for parallel work items are derived from
// (seed, tag, index) so that results never depend on the worker count.
constexpr uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Stream tags keep sub-generators of one run statistically disjoint.
namespace stream {
inline constexpr uint64_t kMonteCarlo = 1;
inline constexpr uint64_t kScan = 2;
inline constexpr uint64_t kSamplePhase = 3;
inline constexpr uint64_t kForest = 4;
inline constexpr uint64_t kAcquire = 5;
inline constexpr uint64_t kDataset = 6;
inline constexpr uint64_t kValidate = 7;
}  // namespace stream

constexpr uint64_t substream_seed(uint64_t seed, uint64_t tag, uint64_t index) {
  return mix64(mix64(seed + (tag << 48)) ^ index);
}

inline std::mt19937_64 make_rng(uint64_t seed, uint64_t tag, uint64_t index) {
  return std::mt19937_64(substream_seed(seed, tag, index));
}

// Uniform double in [0, 1) built from the top 53 bits; avoids the
// implementation-defined std::uniform_real_distribution.
inline double uniform_unit(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection; bit-reproducible everywhere.
inline uint64_t uniform_below(std::mt19937_64 &rng, uint64_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t v = rng();
  while (v >= limit) {
    v = rng();
  }
  return v % bound;
}

inline uint8_t uniform_quarter(std::mt19937_64 &rng) {
  return static_cast<uint8_t>(rng() & 3u);
}

}  // namespace stabkit
