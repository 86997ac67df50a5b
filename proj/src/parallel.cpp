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

#include "stabkit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace stabkit::par {

namespace {
std::atomic<std::size_t> g_thread_count{0};

std::size_t effective_threads() {
  std::size_t n = g_thread_count.load(std::memory_order_relaxed);
  if (n == 0) {
    n = std::thread::hardware_concurrency();
  }
  return std::max<std::size_t>(n, 1);
}
}  // namespace

void set_thread_count(std::size_t n) {
  g_thread_count.store(n, std::memory_order_relaxed);
}

std::size_t thread_count() { return effective_threads(); }

void for_chunks(std::size_t count, std::size_t min_per_chunk,
                const std::function<void(std::size_t, std::size_t, std::size_t)> &body) {
  if (count == 0) {
    return;
  }
  min_per_chunk = std::max<std::size_t>(min_per_chunk, 1);
  std::size_t chunks = std::min(effective_threads(), count / min_per_chunk);
  if (chunks <= 1) {
    body(0, count, 0);
    return;
  }

  // Lowest-index failure wins so error reporting is worker-count invariant.
  std::mutex err_mutex;
  std::exception_ptr first_error;
  std::size_t first_error_chunk = chunks;

  std::vector<std::thread> workers;
  workers.reserve(chunks);
  const std::size_t base = count / chunks;
  const std::size_t rem = count % chunks;
  std::size_t begin = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t len = base + (c < rem ? 1 : 0);
    const std::size_t end = begin + len;
    workers.emplace_back([&, begin, end, c] {
      try {
        body(begin, end, c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (c < first_error_chunk) {
          first_error_chunk = c;
          first_error = std::current_exception();
        }
      }
    });
    begin = end;
  }
  for (auto &w : workers) {
    w.join();
  }
  if (first_error) {
    std::rethrow_exception(first_error);
  }
}

}  // namespace stabkit::par
