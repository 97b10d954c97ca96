#pragma once

// Data-parallel building blocks. Every kernel has an OpenMP path and a plain
// serial loop; both produce bitwise identical results because each index is
// computed independently and reductions are done afterwards in index order.

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <span>
#include <vector>

namespace gradpade {

enum class Execution { serial, parallel };

/// Number of threads the parallel path will use (1 without OpenMP).
int parallel_threads();

/// Runs fn(i) for i in [0, n). Exceptions thrown by fn are rethrown on the
/// calling thread (the first one wins).
template <class Fn>
void for_each_index(std::size_t n, Execution exec, Fn&& fn) {
  if (exec == Execution::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  const auto count = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

/// One Gauss-Kronrod panel [a, b] with its 15-point estimate and error.
struct Panel {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

/// Fills value/error of every panel from the G7-K15 pair.
void evaluate_panels(const std::function<double(double)>& f, std::span<Panel> panels,
                     Execution exec);

/// f(x_i) for every sample.
std::vector<double> evaluate_field(const std::function<double(double)>& f,
                                   std::span<const double> x, Execution exec);

}  // namespace gradpade
