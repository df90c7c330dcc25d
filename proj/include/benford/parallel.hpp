#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace benford {

/// Worker cap for ensemble generation: BENFORD_WALK_THREADS when set,
/// otherwise hardware parallelism (at least 1).
unsigned worker_cap();

/// Runs `gen(i)` for i in [0, m), possibly in parallel, then feeds the
/// results to `fold(i, result)` strictly in index order. Output is therefore
/// bit-identical for every thread count. Replicas are produced in fixed-size
/// batches so memory stays bounded by the batch, not by m.
template <typename Gen, typename Fold>
void replica_map_reduce(std::uint64_t m, Gen&& gen, Fold&& fold) {
    using Result = std::decay_t<decltype(gen(std::uint64_t{0}))>;
    constexpr std::uint64_t kBatch = 1024;

    const unsigned cap = worker_cap();
    if (cap <= 1 || m <= 1) {
        for (std::uint64_t i = 0; i < m; ++i)
            fold(i, gen(i));
        return;
    }

    std::vector<Result> slots;
    for (std::uint64_t start = 0; start < m; start += kBatch) {
        const std::uint64_t end = std::min(start + kBatch, m);
        slots.assign(end - start, Result{});

        std::atomic<std::uint64_t> cursor{start};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;

        const unsigned workers =
            static_cast<unsigned>(std::min<std::uint64_t>(cap, end - start));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                std::uint64_t i;
                while ((i = cursor.fetch_add(1)) < end && !failed.load(std::memory_order_relaxed)) {
                    try {
                        slots[i - start] = gen(i);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error)
                            error = std::current_exception();
                        failed.store(true, std::memory_order_relaxed);
                    }
                }
            });
        }
        for (auto& t : pool)
            t.join();
        if (error)
            std::rethrow_exception(error);

        for (std::uint64_t i = start; i < end; ++i)
            fold(i, std::move(slots[i - start]));
    }
}

}  // namespace benford
