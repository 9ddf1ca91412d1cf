#include "hermlab/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hermlab {

int worker_count() {
    if (const char* env = std::getenv("HERMLAB_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
    const int workers = worker_count();
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<std::size_t>(workers, count) - 1;
    for (int t = 0; t < spawn; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

} // namespace hermlab
