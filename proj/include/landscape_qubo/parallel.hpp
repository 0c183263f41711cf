#pragma once

#include <cstddef>
#include <functional>

namespace lq {

// Runs body(i) for i in [0, count). Tasks must write only to their own slot;
// results are then independent of scheduling order. threads <= 0 picks the
// hardware concurrency, threads == 1 runs inline.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

int default_thread_count();

}  // namespace lq
