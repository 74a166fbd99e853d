#include "plbord/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace plbord {

namespace {
std::atomic<unsigned> g_cap{0};

unsigned env_default() {
    if (const char* env = std::getenv("PLBORD_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 0;
}
}  // namespace

void set_thread_cap(unsigned n) { g_cap.store(n); }

unsigned thread_cap() {
    unsigned cap = g_cap.load();
    if (cap == 0) cap = env_default();
    if (cap == 0) cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    return cap;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& body) {
    unsigned workers = thread_cap();
    if (workers <= 1 || count < 2048) {
        body(0, count);
        return;
    }
    if (workers > count) workers = static_cast<unsigned>(count);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::size_t chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        std::size_t begin = w * chunk;
        std::size_t end = begin + chunk < count ? begin + chunk : count;
        if (begin >= end) break;
        threads.emplace_back([&body, begin, end] { body(begin, end); });
    }
    for (auto& t : threads) t.join();
}

}  // namespace plbord
