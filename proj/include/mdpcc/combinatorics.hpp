#pragma once

#include <cstdint>
#include <vector>

namespace mdpcc {

// Strictly increasing k-subsets of {1,...,n} in lexicographic order.
// The callback returns false to stop early; the function returns false
// when enumeration was stopped.
template <typename F>
bool for_each_combination(int n, int k, F&& cb) {
    if (k < 0 || k > n) return true;
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i + 1;
    if (k == 0) return cb(cur);
    for (;;) {
        if (!cb(static_cast<const std::vector<int>&>(cur))) return false;
        int i = k - 1;
        while (i >= 0 && cur[i] == n - (k - 1 - i)) --i;
        if (i < 0) return true;
        ++cur[i];
        for (int t = i + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
    }
}

// Binomial coefficient, saturating at 2^62 to keep guard arithmetic safe.
std::uint64_t binomial(int n, int k);

}  // namespace mdpcc
