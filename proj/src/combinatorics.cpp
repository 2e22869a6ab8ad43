#include "seqtype/combinatorics.hpp"

namespace seqtype {

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (n - k + i) may overflow; guard against the cap first
        if (r > cap) return cap;
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r > cap ? cap : r;
}

} // namespace seqtype
