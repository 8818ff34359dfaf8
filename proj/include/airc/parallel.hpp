#pragma once

#include <cstdint>
#include <functional>

namespace airc {

/// Number of worker threads for row-parallel kernels. Reads AIRC_THREADS
/// once (values < 1 fall back to 1); defaults to hardware concurrency
/// capped at 8.
int kernel_threads();

/// Run fn(begin, end) over [0, count) split into contiguous chunks, one per
/// worker. Serial when count is small or one thread is configured. Chunks
/// never interleave, so per-row accumulation order is unaffected.
void parallel_for_rows(std::int64_t count, const std::function<void(std::int64_t, std::int64_t)>& fn);

}  // namespace airc
