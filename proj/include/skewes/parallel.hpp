// Copyright 2026 The skewes-cert Authors
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
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace skewes {

inline constexpr std::size_t kDefaultChunkSize = std::size_t{1} << 16;

// threads = 0 means std::thread::hardware_concurrency(). Results never depend
// on threads; they may depend on chunk_size.
struct ParallelOptions {
  std::size_t chunk_size = kDefaultChunkSize;
  unsigned threads = 0;
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

// Splits [0, n) into fixed chunks and returns fn(begin, end) for each chunk in
// index order. Workers pull chunk indices from a shared counter; each result
// lands in its own slot, so the output is identical for any thread count.
template <typename Result, typename Fn>
std::vector<Result> map_chunks(std::size_t n, const ParallelOptions& opt, Fn fn) {
  const std::size_t chunk = std::max<std::size_t>(opt.chunk_size, 1);
  const std::size_t chunks = (n + chunk - 1) / chunk;
  std::vector<Result> out(chunks);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(opt.threads), chunks));
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) out[c] = fn(c * chunk, std::min(n, (c + 1) * chunk));
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t c = next++; c < chunks; c = next++) {
      try {
        out[c] = fn(c * chunk, std::min(n, (c + 1) * chunk));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace skewes
