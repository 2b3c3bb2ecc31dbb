// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace biloewner {

/// Worker count for embarrassingly parallel loops. BILOEWNER_THREADS caps it;
/// defaults to the hardware concurrency, clamped to [1, 16].
int thread_budget();

/// Runs body(i) for i in [0, count). Splits statically across threads when the
/// budget and the workload justify it; the first exception thrown by any
/// worker is rethrown after all join. Results must be written by index so the
/// output ordering is deterministic.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
  const int budget = thread_budget();
  if (budget <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(budget), count);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::vector<std::exception_ptr> errors(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      try {
        for (std::size_t i = w; i < count; i += workers) body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) { first_error = e; break; }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace biloewner
