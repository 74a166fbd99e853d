#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace plbord {

// Worker cap shared by all parallel loops. 0 = hardware concurrency.
// Mirrors the CLI --threads flag and PLBORD_THREADS.
void set_thread_cap(unsigned n);
unsigned thread_cap();

// Index-partitioned parallel loop. Each worker handles a contiguous block,
// so any reduction performed afterwards in index order is deterministic
// regardless of the number of threads.
void parallel_for(std::size_t count, const std::function<void(std::size_t begin, std::size_t end)>& body);

}  // namespace plbord
