#include "visang/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace visang {

std::size_t worker_count() {
    std::size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("VAL_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0)
            n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    }
    return n;
}

void parallel_rows(std::size_t n_rows, const std::function<void(std::size_t)>& fn,
                   std::size_t workers) {
    workers = std::max<std::size_t>(1, std::min(workers, n_rows));
    if (workers <= 1 || n_rows <= 1) {
        for (std::size_t r = 0; r < n_rows; ++r)
            fn(r);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t lo = n_rows * w / workers;
        const std::size_t hi = n_rows * (w + 1) / workers;
        pool.emplace_back([&fn, lo, hi] {
            for (std::size_t r = lo; r < hi; ++r)
                fn(r);
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace visang
