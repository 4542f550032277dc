#pragma once

#include <functional>

namespace weylcq {

/* Worker-count knob for the data-parallel lattice scans.  0 means "use
 * hardware_concurrency".  Results are merged by order-independent sums, so
 * the outputs do not depend on the thread count. */
void set_worker_threads(int n);
int worker_threads();

/* Splits [begin, end) into contiguous chunks, runs body(chunk_begin,
 * chunk_end, worker_index) on each, and returns the number of workers used.
 * Runs inline when a single worker suffices. */
int parallel_chunks(long long begin, long long end,
                    const std::function<void(long long, long long, int)>& body);

}  // namespace weylcq
