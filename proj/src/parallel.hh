/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef MINHOM_SRC_PARALLEL_HH
#define MINHOM_SRC_PARALLEL_HH 1

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace minhom
{
    /**
     * Run body(i) for every i in [0, count) on up to `threads` workers. Work
     * is handed out in index order; callers write results by index, so the
     * outcome never depends on scheduling. The first exception is rethrown.
     */
    template <typename Body_>
    auto parallel_for(long count, int threads, const Body_ & body) -> void
    {
        if (threads <= 1 || count <= 1) {
            for (long i = 0 ; i < count ; ++i)
                body(i);
            return;
        }

        std::atomic<long> next{ 0 };
        std::exception_ptr failure;
        std::mutex failure_mutex;

        auto worker = [&] () {
            for (long i = next++ ; i < count ; i = next++) {
                try {
                    body(i);
                }
                catch (...) {
                    std::lock_guard<std::mutex> guard(failure_mutex);
                    if (! failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        };

        std::vector<std::thread> pool;
        for (int t = 0 ; t < threads ; ++t)
            pool.emplace_back(worker);
        for (auto & t : pool)
            t.join();

        if (failure)
            std::rethrow_exception(failure);
    }
}

#endif
