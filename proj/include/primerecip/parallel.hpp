#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "primerecip/errors.hpp"

namespace primerecip {

using Clock = std::chrono::steady_clock;

struct ExecOptions {
    unsigned threads = 1;
    std::optional<Clock::time_point> deadline;
    // Called with (chunks done, chunks total); serialized, may come from any worker.
    std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Evaluates fn(i) for every chunk index in [0, n_chunks) on up to
/// opts.threads workers and returns the results indexed by chunk. Chunk
/// boundaries are the caller's, so any index-order fold over the result is
/// independent of the worker count. Throws budget_exceeded if the deadline
/// passes; the first worker exception is rethrown after all workers join.
template <class Result, class Fn>
std::vector<Result> run_chunks(std::size_t n_chunks, const ExecOptions& opts, Fn&& fn) {
    std::vector<Result> results(n_chunks);
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> done{0};
    std::atomic<bool> abort{false};
    std::exception_ptr failure;
    std::mutex mu;

    auto worker = [&] {
        for (;;) {
            if (abort.load(std::memory_order_relaxed)) return;
            std::size_t i = next.fetch_add(1);
            if (i >= n_chunks) return;
            if (opts.deadline && Clock::now() > *opts.deadline) {
                std::lock_guard lock(mu);
                if (!failure)
                    failure = std::make_exception_ptr(budget_exceeded("time budget exceeded"));
                abort = true;
                return;
            }
            try {
                results[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
                abort = true;
                return;
            }
            std::uint64_t d = done.fetch_add(1) + 1;
            if (opts.progress) {
                std::lock_guard lock(mu);
                opts.progress(d, n_chunks);
            }
        }
    };

    unsigned n_workers = opts.threads == 0 ? 1 : opts.threads;
    if (n_workers > n_chunks) n_workers = n_chunks == 0 ? 1 : static_cast<unsigned>(n_chunks);
    if (n_workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (unsigned t = 0; t < n_workers; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return results;
}

/// Default worker count: DSEQ_THREADS if set and positive, else hardware concurrency.
unsigned default_thread_count();

}  // namespace primerecip
