#pragma once

#include <cstddef>
#include <functional>

namespace ryd {

// Worker count: hardware concurrency, capped by RYD_THREADS when set.
unsigned worker_count();

// Runs body(i) for i in [0, count); indices are handed out dynamically.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace ryd
