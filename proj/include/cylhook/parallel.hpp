#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace cylhook {

/// Sums term(0) + term(1) + ... + term(count-1) with `jobs` worker threads.
///
/// The index range is split into contiguous chunks, each chunk is summed
/// sequentially, and the chunk totals are reduced in chunk order. With exact
/// arithmetic the result is identical for every job count, which is what the
/// determinism contract of the CLI relies on.
/// Runs fn(0) ... fn(count-1) on `jobs` threads over contiguous index
/// chunks. Results must be written to disjoint slots by the caller.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs < 1) jobs = 1;
    if (count == 0) return;
    if (jobs == 1 || count < 64) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::size_t nchunk = static_cast<std::size_t>(jobs);
    if (nchunk > count) nchunk = count;
    std::vector<std::thread> threads;
    threads.reserve(nchunk);
    for (std::size_t c = 0; c < nchunk; ++c) {
        std::size_t lo = count * c / nchunk;
        std::size_t hi = count * (c + 1) / nchunk;
        threads.emplace_back([&fn, lo, hi] {
            for (std::size_t i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& t : threads) t.join();
}

template <typename T, typename Term>
T parallel_sum(std::size_t count, int jobs, Term&& term) {
    if (jobs < 1) jobs = 1;
    if (count == 0) return T(0);
    if (jobs == 1 || count < 64) {
        T total(0);
        for (std::size_t i = 0; i < count; ++i) total += term(i);
        return total;
    }
    std::size_t nchunk = static_cast<std::size_t>(jobs);
    if (nchunk > count) nchunk = count;
    std::vector<T> partial(nchunk, T(0));
    std::vector<std::thread> threads;
    threads.reserve(nchunk);
    for (std::size_t c = 0; c < nchunk; ++c) {
        std::size_t lo = count * c / nchunk;
        std::size_t hi = count * (c + 1) / nchunk;
        threads.emplace_back([&, lo, hi, c] {
            T local(0);
            for (std::size_t i = lo; i < hi; ++i) local += term(i);
            partial[c] = std::move(local);
        });
    }
    for (auto& t : threads) t.join();
    T total(0);
    for (auto& p : partial) total += p;
    return total;
}

} // namespace cylhook
