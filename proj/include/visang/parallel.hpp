#pragma once

#include <cstddef>
#include <functional>

namespace visang {

/// Number of workers used by row-parallel loops: min(hardware threads,
/// VAL_THREADS) when the environment variable is set, at least 1.
std::size_t worker_count();

/// Runs fn(row) for row = 0..n_rows-1 on up to `workers` threads with a
/// fixed block partition. Each row must write only to its own slot of a
/// caller-owned buffer; the caller reduces the buffer in row order
/// afterwards, so the result is bit-identical for any worker count.
void parallel_rows(std::size_t n_rows, const std::function<void(std::size_t)>& fn,
                   std::size_t workers = worker_count());

} // namespace visang
