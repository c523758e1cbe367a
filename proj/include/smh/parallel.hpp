//
// Project SMH - Copyright 2026 SMH Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SMH_PARALLEL_HPP_
#define SMH_PARALLEL_HPP_

#include <exception>

namespace smh {

/// Worker cap used by every OpenMP kernel in the library. Defaults to the
/// machine's core count. All kernels parallelize over independent output
/// slots, so results do not depend on the thread count.
int max_threads();

/// Set the worker cap; values < 1 reset to the hardware default.
void set_max_threads(int n);

/// Parallel loop over [0, n) that survives exceptions: an exception thrown
/// by the body is captured and rethrown after the region instead of
/// terminating the process, which is what a bare throw inside an OpenMP
/// construct would do.
template <typename Fn>
void parallel_for_index(int n, Fn&& fn) {
  std::exception_ptr failure = nullptr;
#pragma omp parallel for schedule(dynamic) num_threads(smh::max_threads())
  for (int i = 0; i < n; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(smh_parallel_failure)
      {
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace smh

#endif  // SMH_PARALLEL_HPP_
