#pragma once

#include <cstddef>
#include <functional>

namespace torustransit {

/// Worker cap: min(hardware threads, TORUS_TRANSIT_THREADS when set).
size_t worker_count();

/// Runs fn over [0, total) in contiguous chunks, one per worker. Callers
/// keep determinism by writing to disjoint, index-addressed slots.
void parallel_for(size_t total, const std::function<void(size_t begin, size_t end)>& fn);

}  // namespace torustransit
