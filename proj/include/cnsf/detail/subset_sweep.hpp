#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <utility>
#include <vector>

namespace cnsf::detail {

// Folds fn(acc, mask) over every bit mask in [0, 2^bits).  With jobs > 1
// the range is split into contiguous chunks; each worker folds into its own
// copies of `zero` and `fn`, and partials are merged left to right, so the
// result does not depend on scheduling as long as merge is associative and
// fn is order-independent under merge (coefficient-wise addition is).
template <typename Acc, typename Fn, typename Merge>
Acc sweep_masks(int bits, int jobs, Acc zero, Fn fn, Merge merge) {
    const std::uint64_t total = std::uint64_t{1} << bits;
    if (jobs <= 1 || total < 2048) {
        Acc acc = std::move(zero);
        Fn f = std::move(fn);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            f(acc, mask);
        }
        return acc;
    }

    const int workers = static_cast<std::uint64_t>(jobs) < total ? jobs : static_cast<int>(total);
    std::vector<Acc> parts(workers, zero);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
        const std::uint64_t end = begin + total / workers + (static_cast<std::uint64_t>(w) < total % workers ? 1 : 0);
        threads.emplace_back([&parts, w, begin, end, f = fn]() mutable {
            for (std::uint64_t mask = begin; mask < end; ++mask) {
                f(parts[w], mask);
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    Acc acc = std::move(parts[0]);
    for (int w = 1; w < workers; ++w) {
        merge(acc, parts[w]);
    }
    return acc;
}

} // namespace cnsf::detail
