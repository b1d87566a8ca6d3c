#pragma once

// Data-parallel loop used by all tabulation and assembly kernels.
//
// Every kernel in the engine writes each output slot from exactly one loop
// iteration, so the serial and the OpenMP paths produce bit-identical
// results. The serial path is kept as the reference the tests compare
// against.

#include <cstddef>
#include <exception>
#include <mutex>

namespace wrb {

enum class Exec { serial, parallel };

template <class Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace wrb
