#include "torustransit/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace torustransit {

size_t worker_count() {
    size_t n = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TORUS_TRANSIT_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) n = std::min(n, static_cast<size_t>(cap));
    }
    return n;
}

void parallel_for(size_t total, const std::function<void(size_t, size_t)>& fn) {
    if (total == 0) return;
    const size_t workers = std::min(worker_count(), total);
    if (workers <= 1) {
        fn(0, total);
        return;
    }
    const size_t chunk = (total + workers - 1) / workers;
    std::vector<std::future<void>> tasks;
    for (size_t begin = 0; begin < total; begin += chunk) {
        const size_t end = std::min(begin + chunk, total);
        tasks.push_back(std::async(std::launch::async, [&fn, begin, end] { fn(begin, end); }));
    }
    for (auto& t : tasks) t.get();
}

}  // namespace torustransit
