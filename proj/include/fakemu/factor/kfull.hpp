#pragma once

#include <cstdint>

namespace fakemu {

// Counts of t-element subsets I of {1..k} (0 <= t <= 3) entering the
// k-full exponent a_j: S_t with j - sum_{i in I}(k+i-1) >= k, T_t with
// that difference exactly 0. Closed forms valid for k >= 5 and
// 2k+3 <= j <= 4k+4.
std::int64_t kfull_S(int t, int k, int j);
std::int64_t kfull_T(int t, int k, int j);

// a_j in the zeta-factorization of the k-full indicator. Throws
// InvalidArgument outside k >= 5, 2k+3 <= j <= 4k+4.
std::int64_t kfull_exponents(int k, int j);

}  // namespace fakemu
