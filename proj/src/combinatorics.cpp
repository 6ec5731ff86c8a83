#include "mdpcc/combinatorics.hpp"

namespace mdpcc {

std::uint64_t binomial(int n, int k) {
    constexpr std::uint64_t cap = 1ull << 62;
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        if (r > cap / static_cast<std::uint64_t>(n - k + i)) return cap;
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
        if (r >= cap) return cap;
    }
    return r;
}

}  // namespace mdpcc
