#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace gravheun {

// Worker count for internal grid scans. Read once from GRAVHEUN_THREADS
// (0 or unset = hardware concurrency); set_thread_count overrides it.
unsigned thread_count();
void set_thread_count(unsigned n);

// Evaluates fn(i) for i in [0, n) and returns the results in index order,
// so output is identical whatever the thread count. The first exception
// thrown by any worker is rethrown on the calling thread.
std::vector<double> parallel_map(std::size_t n, const std::function<double(std::size_t)>& fn);

}  // namespace gravheun
