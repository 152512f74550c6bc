#pragma once

#include <cstddef>
#include <functional>

namespace svmaj {

/// Calls body(i) for every i < n on up to `workers` threads. Each index runs
/// exactly once; callers write into per-index slots so the result does not
/// depend on scheduling. The first exception thrown stops the remaining work
/// and is rethrown here.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& body);

}  // namespace svmaj
