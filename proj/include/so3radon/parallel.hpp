#pragma once

#include <cstddef>
#include <functional>

namespace so3radon {

// Default worker count: SO3RADON_THREADS if set, else 1.
int thread_count();
void set_thread_count(int n);

// Runs body(begin, end) over fixed-size chunks of [0, n). Chunk boundaries do not
// depend on the worker count, so per-chunk partial results reduced in chunk order
// are bitwise reproducible.
void parallel_chunks(std::size_t n, std::size_t chunk,
                     const std::function<void(std::size_t chunk_index, std::size_t begin, std::size_t end)>& body);

inline std::size_t chunk_count(std::size_t n, std::size_t chunk) { return (n + chunk - 1) / chunk; }

}  // namespace so3radon
