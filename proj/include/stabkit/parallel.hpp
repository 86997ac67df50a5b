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

#include <cstddef>
#include <functional>

namespace stabkit::par {

// 0 means "use hardware concurrency".
void set_thread_count(std::size_t n);
std::size_t thread_count();

// Splits [0, count) into contiguous chunks and runs body(begin, end, chunk)
// on worker threads. Falls back to a single serial call when the range is
// smaller than min_per_chunk. Chunk results must be written to disjoint,
// index-addressed locations (or commutative integer tallies) so the outcome
// is identical for any worker count.
void for_chunks(std::size_t count, std::size_t min_per_chunk,
                const std::function<void(std::size_t, std::size_t, std::size_t)> &body);

}  // namespace stabkit::par
