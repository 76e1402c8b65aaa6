#pragma once

#include <cstddef>
#include <functional>

namespace griddom {

/// Worker count used by the parallel kernels. 0 selects hardware concurrency.
void set_worker_threads(unsigned threads);
[[nodiscard]] unsigned worker_threads();

/// Runs body(begin, end) over contiguous chunks of [0, count) on the worker
/// pool and joins. Chunks never overlap.
void parallel_for_chunks(std::size_t count,
                         const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace griddom
