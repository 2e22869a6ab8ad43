#pragma once

#include <cstdint>
#include <vector>

namespace seqtype {

// Visits all k-subsets of {0,...,n-1} in lexicographic order.
template <typename F>
void for_each_combination(int n, int k, F&& visit) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

// Binomial coefficient, saturating at cap to keep planning arithmetic safe.
std::uint64_t binomial_capped(int n, int k, std::uint64_t cap);

} // namespace seqtype
