#pragma once

#include <cstddef>
#include <functional>

namespace lelong {

// Worker cap: LELONGLAB_THREADS if set and positive, else hardware concurrency.
std::size_t worker_count();

// Runs task(i) for i in [0, n). Results must be written by index; the first
// exception by index order is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& task);

}  // namespace lelong
