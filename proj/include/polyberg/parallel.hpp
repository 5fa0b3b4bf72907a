#pragma once

#include <functional>

namespace polyberg {

/// Hardware concurrency, capped by the POLYBERG_THREADS environment variable when set.
unsigned worker_count();

/// Runs f(i) for i in [begin, end). Indices are claimed dynamically, so f must
/// write only to slots owned by i. The first exception thrown is rethrown here.
void parallel_for(int begin, int end, const std::function<void(int)>& f);

}  // namespace polyberg
