// SPDX-License-Identifier: MIT
#pragma once

#include <cstddef>
#include <functional>

namespace leja {

/// Worker count for grid sweeps: hardware concurrency, capped by the
/// LEJA_LAB_THREADS environment variable when it holds a positive integer.
[[nodiscard]] std::size_t worker_count();

/// Splits [0, count) into contiguous chunks and runs body(chunk, begin, end)
/// on up to worker_count() threads. Chunk c always covers the same range for
/// a given (count, chunks), so callers can reduce per-chunk results in order.
/// Returns the number of chunks used.
std::size_t parallel_chunks(std::size_t count,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

/// Number of chunks parallel_chunks() will use for `count` items.
[[nodiscard]] std::size_t chunk_count(std::size_t count);

}  // namespace leja
