#pragma once

#include <cstddef>
#include <functional>

namespace fockspace {

/// Worker count from FOCKSPACE_THREADS (0 or unset = hardware concurrency).
unsigned thread_count();

/// Runs task(chunk) for every chunk in [0, chunks) on up to thread_count()
/// workers. Callers write results into per-chunk slots and reduce them in
/// chunk order, so the outcome never depends on scheduling.
void parallel_chunks(std::size_t chunks, const std::function<void(std::size_t)>& task);

}  // namespace fockspace
