#pragma once

#include <cstdint>
#include <functional>

namespace fakemu::testing {

// Number of t-subsets of {1..k} whose element sum satisfies `accept`.
inline std::int64_t subset_count(int k, int t, const std::function<bool(int)>& accept) {
    std::int64_t count = 0;
    std::function<void(int, int, int)> go = [&](int next, int left, int sum) {
        if (left == 0) {
            if (accept(sum)) ++count;
            return;
        }
        for (int i = next; i <= k; ++i) go(i + 1, left - 1, sum + i);
    };
    go(1, t, 0);
    return count;
}

// a_j for the k-full indicator by enumerating all subsets of {1..k}.
inline std::int64_t brute_kfull(int k, int j) {
    std::int64_t a = 0;
    for (int t = 0; t <= k; ++t) {
        const auto s = subset_count(k, t, [&](int sum) { return j - (sum + t * (k - 1)) >= k; });
        const auto tt = subset_count(k, t, [&](int sum) { return j - (sum + t * (k - 1)) == 0; });
        a += (t % 2 ? -1 : 1) * (s + tt);
    }
    return a;
}

}  // namespace fakemu::testing
