#ifndef MAGPATH_COMBINATIONS_HPP
#define MAGPATH_COMBINATIONS_HPP

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace magpath {

/// Calls `fn` with every size-k subset of {0..n-1}, as increasing index
/// lists, in lexicographic order. Stops early when `fn` returns false.
/// Returns false iff stopped early.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return true;
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    while (true) {
        if (!fn(std::span<const std::size_t>(pick))) return false;
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
        if (i == 0) return true;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

/// Every subset of {0..n-1}, by size and then lexicographically.
template <typename Fn>
bool for_each_subset(std::size_t n, Fn&& fn) {
    for (std::size_t k = 0; k <= n; ++k) {
        if (!for_each_combination(n, k, fn)) return false;
    }
    return true;
}

}  // namespace magpath

#endif  // MAGPATH_COMBINATIONS_HPP
