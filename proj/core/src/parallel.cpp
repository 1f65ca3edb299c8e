#include "gravheun/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace gravheun {

namespace {

unsigned from_environment() {
    unsigned n = 0;
    if (const char* env = std::getenv("GRAVHEUN_THREADS")) {
        try {
            n = static_cast<unsigned>(std::stoul(env));
        } catch (const std::exception&) {
            n = 0;
        }
    }
    if (n == 0) n = std::max(1u, std::thread::hardware_concurrency());
    return n;
}

std::atomic<unsigned>& configured() {
    static std::atomic<unsigned> value{from_environment()};
    return value;
}

}  // namespace

unsigned thread_count() { return configured().load(); }

void set_thread_count(unsigned n) {
    configured().store(n == 0 ? std::max(1u, std::thread::hardware_concurrency()) : n);
}

std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& fn) {
    std::vector<double> out(n);
    const std::size_t workers = std::min<std::size_t>(thread_count(), n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
        return out;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                out[i] = fn(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next = n;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace gravheun
