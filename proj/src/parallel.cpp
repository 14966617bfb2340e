// SPDX-License-Identifier: MIT
#include "lejalab/parallel.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <thread>
#include <vector>

namespace leja {

std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("LEJA_LAB_THREADS")) {
        std::size_t cap = 0;
        auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), cap);
        if (ec == std::errc{} && cap > 0) n = std::min(n, cap);
    }
    return n;
}

std::size_t chunk_count(std::size_t count) { return std::max<std::size_t>(1, std::min(count, worker_count())); }

std::size_t parallel_chunks(std::size_t count,
                            const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    const std::size_t chunks = chunk_count(count);
    auto range = [&](std::size_t c) {
        return std::pair{count * c / chunks, count * (c + 1) / chunks};
    };
    if (chunks == 1) {
        body(0, 0, count);
        return 1;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(chunks);
    pool.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
        pool.emplace_back([&, c] {
            try {
                auto [b, e] = range(c);
                body(c, b, e);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return chunks;
}

}  // namespace leja
