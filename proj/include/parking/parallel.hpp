#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace parking {

/// Runs fill(part, out[part]) for part in [0, parts) on up to `jobs` threads and concatenates
/// the per-part vectors in part order. The first exception thrown by any part is rethrown.
template <class T>
std::vector<T> collect_partitioned(std::size_t parts, int jobs,
                                   const std::function<void(std::size_t, std::vector<T>&)>& fill) {
    std::vector<std::vector<T>> chunks(parts);
    const auto workers = static_cast<std::size_t>(std::clamp<std::size_t>(
        static_cast<std::size_t>(std::max(jobs, 1)), 1, std::max<std::size_t>(parts, 1)));

    if (workers <= 1) {
        for (std::size_t p = 0; p < parts; ++p) fill(p, chunks[p]);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    for (std::size_t p = w; p < parts; p += workers) fill(p, chunks[p]);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    std::vector<T> out;
    for (auto& chunk : chunks) {
        out.insert(out.end(), std::make_move_iterator(chunk.begin()),
                   std::make_move_iterator(chunk.end()));
    }
    return out;
}

}  // namespace parking
