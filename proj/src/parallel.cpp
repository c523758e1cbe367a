//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "smh/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace smh {

namespace {

int hardware_default() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::atomic<int>& cap() {
  static std::atomic<int> value{hardware_default()};
  return value;
}

}  // namespace

int max_threads() { return cap().load(std::memory_order_relaxed); }

void set_max_threads(int n) {
  cap().store(n >= 1 ? n : hardware_default(), std::memory_order_relaxed);
}

}  // namespace smh
