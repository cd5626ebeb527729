#pragma once

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hardylab::par {

enum class Mode { Serial, OpenMP };

// Process-wide execution mode for the data-parallel kernels. Every kernel
// writes a per-index result into caller-owned storage and reductions happen
// serially in index order afterwards, so Serial and OpenMP produce
// bit-identical output. Tests pin this down.
Mode& mode() noexcept;

bool openmp_compiled() noexcept;
int max_threads() noexcept;

namespace detail {

template <class F>
void run_serial(std::ptrdiff_t n, F& body) {
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

}  // namespace detail

// Apply body(i) for i in [0, n). The body must not touch shared mutable
// state except its own slot. Exceptions escaping the body are captured and
// rethrown after the loop joins (throwing across an OpenMP region aborts).
template <class F>
void for_index(std::ptrdiff_t n, F&& body) {
  if (n <= 0) return;
#ifdef _OPENMP
  if (mode() == Mode::OpenMP && n > 1) {
    std::exception_ptr first_error = nullptr;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      try {
        body(i);
      } catch (...) {
#pragma omp critical(hardylab_par_error)
        {
          if (!first_error) first_error = std::current_exception();
        }
      }
    }
    if (first_error) std::rethrow_exception(first_error);
    return;
  }
#endif
  detail::run_serial(n, body);
}

// Scoped override used by tests and the benchmark tool.
class ScopedMode {
 public:
  explicit ScopedMode(Mode m) : saved_(mode()) { mode() = m; }
  ~ScopedMode() { mode() = saved_; }
  ScopedMode(const ScopedMode&) = delete;
  ScopedMode& operator=(const ScopedMode&) = delete;

 private:
  Mode saved_;
};

}  // namespace hardylab::par
