#pragma once

#include <cstddef>
#include <functional>

namespace argus {

/// Worker count for parallel maps: the ARGUS_THREADS environment variable
/// caps it; 0 or unset means hardware concurrency.
int worker_count();

/// Evaluates fn(0..n-1) across workers. Results must not depend on
/// evaluation order; fn must be pure per the module concurrency contracts.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace argus
