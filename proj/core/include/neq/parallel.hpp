#pragma once

#include <cstddef>
#include <functional>

namespace neq {

/// Worker cap: min(hardware_concurrency, NEQ_THREADS if set). At least 1.
std::size_t thread_budget();

/// Runs fn(begin, end) over disjoint contiguous chunks of [0, n), possibly
/// on several threads. Caller-visible results must not depend on the chunk
/// split: workers may only write to per-index slots. Reductions belong in a
/// sequential pass afterwards so results are identical to a single-threaded
/// run.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

} // namespace neq
