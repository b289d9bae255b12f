#include "rikit/parallel.hpp"

#include <cstdlib>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rikit::parallel {

int max_parallelism() {
  if (const char* env = std::getenv("RIKIT_MAX_PARALLELISM")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void run_indexed_serial(int n, const std::function<void(int)>& fn) {
  for (int i = 0; i < n; ++i) fn(i);
}

void run_indexed(int n, const std::function<void(int)>& fn) {
#ifdef _OPENMP
  const int threads = max_parallelism();
  if (threads > 1 && n > 1) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    return;
  }
#endif
  run_indexed_serial(n, fn);
}

}  // namespace rikit::parallel
