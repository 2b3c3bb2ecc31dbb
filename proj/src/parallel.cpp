// Copyright (c) 2026 biloewner contributors
// SPDX-License-Identifier: Apache-2.0

#include "biloewner/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace biloewner {

int thread_budget() {
  static const int budget = [] {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    n = std::min(n, 16);
    if (const char* env = std::getenv("BILOEWNER_THREADS")) {
      try {
        const int cap = std::stoi(env);
        if (cap >= 1) n = std::min(n, cap);
      } catch (...) {
        // ignore unparsable values; keep default
      }
    }
    return n;
  }();
  return budget;
}

}  // namespace biloewner
