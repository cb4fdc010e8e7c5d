#ifndef CHOW0_PARALLEL_HPP
#define CHOW0_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace chow0 {

// Thread count resolution: explicit request > CHOW0_THREADS env > hardware.
unsigned resolve_thread_count(unsigned requested = 0);

// Runs f(i) for i in [0, n) on a dynamic work queue. Results must be written
// into pre-sized slots indexed by i so the output order never depends on
// scheduling. The first exception is rethrown on the caller thread.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& f);

template <class T, class F>
std::vector<T> parallel_map(std::size_t n, unsigned threads, F&& f) {
    std::vector<T> out(n);
    parallel_for(n, threads, [&](std::size_t i) { out[i] = f(i); });
    return out;
}

} // namespace chow0

#endif
