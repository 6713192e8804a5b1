#ifndef STAIRCASE_PARALLEL_HPP
#define STAIRCASE_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace staircase {

/// Thread count from STAIRCASE_LAB_THREADS, else the hardware concurrency
/// (at least 1).
int default_threads();

/// Runs produce(i) for i in [0, count) on `threads` workers that pull the
/// next index from a shared counter, and hands each result to consume(i, r)
/// on the calling thread in increasing i. Workers run at most a few indices
/// ahead of the consumer. The first exception thrown by produce or consume
/// stops the run and is rethrown here.
template <class Produce, class Consume>
void run_ordered(int count, int threads, Produce produce, Consume consume)
{
    using Result = decltype(produce(0));
    if (count <= 0) return;
    threads = std::clamp(threads, 1, count);
    if (threads == 1) {
        for (int i = 0; i < count; ++i) consume(i, produce(i));
        return;
    }

    const int window = 2 * threads;
    std::atomic<int> next{0};
    std::mutex mutex;
    std::condition_variable changed;
    std::map<int, Result> ready;
    int consumed = 0;
    bool stop = false;
    std::exception_ptr error;

    auto worker = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= count) return;
            {
                std::unique_lock lock(mutex);
                changed.wait(lock, [&] { return stop || i < consumed + window; });
                if (stop) return;
            }
            try {
                Result r = produce(i);
                std::lock_guard lock(mutex);
                ready.emplace(i, std::move(r));
            } catch (...) {
                std::lock_guard lock(mutex);
                if (!error) error = std::current_exception();
                stop = true;
            }
            changed.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);

    for (int i = 0; i < count; ++i) {
        Result r;
        {
            std::unique_lock lock(mutex);
            changed.wait(lock, [&] { return stop || ready.count(i) > 0; });
            if (stop) break;
            auto it = ready.find(i);
            r = std::move(it->second);
            ready.erase(it);
        }
        try {
            consume(i, std::move(r));
        } catch (...) {
            std::lock_guard lock(mutex);
            if (!error) error = std::current_exception();
            stop = true;
        }
        bool halt;
        {
            std::lock_guard lock(mutex);
            ++consumed;
            halt = stop;
        }
        changed.notify_all();
        if (halt) break;
    }
    {
        std::lock_guard lock(mutex);
        stop = true;
    }
    changed.notify_all();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace staircase

#endif  // STAIRCASE_PARALLEL_HPP
