#pragma once

#include <cstddef>
#include <exception>
#include <limits>
#include <vector>

#include <omp.h>

namespace galcurve {

/// Serial is the reference path; Parallel partitions the index range over
/// OpenMP threads. Both produce identical results.
enum class Execution { Serial, Parallel };

/// out[i] = fn(i) for i in [0, n). Every index is evaluated independently
/// and written to its own slot, so assembly order does not depend on the
/// thread schedule. If any evaluation throws, the exception of the lowest
/// failing index is rethrown after the loop.
template <class T, class Fn>
std::vector<T> index_map(std::size_t n, Fn&& fn, Execution exec) {
  std::vector<T> out(n);
  if (exec == Execution::Serial) {
    for (std::size_t i = 0; i < n; ++i) {
      out[i] = fn(i);
    }
    return out;
  }
  std::size_t failed_index = std::numeric_limits<std::size_t>::max();
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(galcurve_index_map)
      {
        if (static_cast<std::size_t>(i) < failed_index) {
          failed_index = static_cast<std::size_t>(i);
          failure = std::current_exception();
        }
      }
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return out;
}

}  // namespace galcurve
