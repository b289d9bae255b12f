#pragma once

#include <functional>

namespace rikit::parallel {

// Worker count: RIKIT_MAX_PARALLELISM when set (>= 1), else the OpenMP
// default, else 1.
int max_parallelism();

// Runs fn(0) ... fn(n-1), in parallel when more than one worker is
// available. Indices may run in any order, so fn must only touch its own
// output slot. The first exception thrown by any index is rethrown.
void run_indexed(int n, const std::function<void(int)>& fn);

// Serial reference with identical semantics (in-order).
void run_indexed_serial(int n, const std::function<void(int)>& fn);

}  // namespace rikit::parallel
