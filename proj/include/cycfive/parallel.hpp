// Copyright 2026 The cycfive Authors
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

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace cycfive {

/// Worker threads for the exhaustive searches: hardware concurrency, capped by
/// the CYCFIVE_THREADS environment variable when it holds a positive integer.
inline unsigned worker_count() {
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CYCFIVE_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
    } catch (const std::exception&) {
      // ignored: malformed values leave the default in place
    }
  }
  return n;
}

/// Runs probe(i) for i = 0, 1, ... across the workers and returns the smallest
/// index whose probe succeeded. Every index below the returned one has been
/// probed, so the answer does not depend on scheduling.
template <class Probe>
std::optional<int> parallel_first_hit(int count, Probe&& probe) {
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max(count, 1)));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) {
      if (probe(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<int> next{0};
  std::atomic<int> best{count};
  auto run = [&] {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count || i >= best.load()) return;
      if (probe(i)) {
        int seen = best.load();
        while (i < seen && !best.compare_exchange_weak(seen, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
  }
  if (best.load() >= count) return std::nullopt;
  return best.load();
}

/// Runs body(i) for every i in [0, count) across the workers.
template <class Body>
void parallel_for(int count, Body&& body) {
  const unsigned workers = std::min<unsigned>(worker_count(), static_cast<unsigned>(std::max(count, 1)));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  auto run = [&] {
    for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) body(i);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run);
}

}  // namespace cycfive
