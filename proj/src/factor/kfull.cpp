#include "fakemu/factor/kfull.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "fakemu/core/errors.hpp"

namespace fakemu {
namespace {

void check_range(int k, int j) {
    if (k < 5 || j < 2 * k + 3 || j > 4 * k + 4) {
        throw InvalidArgument("kfull_exponents: need k >= 5 and 2k+3 <= j <= 4k+4, got k=" +
                              std::to_string(k) + " j=" + std::to_string(j));
    }
}

std::int64_t sq(std::int64_t x) { return x * x; }
std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }
// Nearest integer to x/12; x^2 mod 12 is never 6, so no ties arise.
std::int64_t round12(std::int64_t x) { return (x + 6) / 12; }

}  // namespace

std::int64_t kfull_S(int t, int k, int j) {
    check_range(k, j);
    const std::int64_t K = k, J = j;
    switch (t) {
        case 0: return 1;
        case 1: return std::min(K, J - 2 * K + 1);
        case 2:
            if (J <= 3 * K) return 0;
            if (J <= 4 * K - 1) return sq(J - 3 * K + 1) / 4;
            return sq(J - 3 * K + 1) / 4 - choose2(J - 4 * K + 2);
        case 3: return std::max<std::int64_t>(0, J - 4 * K - 2);
        default: throw InvalidArgument("kfull_S: t must be in 0..3");
    }
}

std::int64_t kfull_T(int t, int k, int j) {
    check_range(k, j);
    const std::int64_t K = k, J = j;
    switch (t) {
        case 0:
        case 1: return 0;
        case 2:
            if (J <= 4 * K - 2) return (K - std::abs(J - 3 * K + 1)) / 2;
            return 0;
        case 3:
            if (J <= 3 * K) return 0;
            if (J <= 4 * K) return round12(sq(J - 3 * K));
            return round12(sq(J - 3 * K)) - sq(J - 4 * K + 1) / 4;
        default: throw InvalidArgument("kfull_T: t must be in 0..3");
    }
}

std::int64_t kfull_exponents(int k, int j) {
    check_range(k, j);
    std::int64_t a = 0;
    for (int t = 0; t <= 3; ++t) {
        const std::int64_t term = kfull_S(t, k, j) + kfull_T(t, k, j);
        a += (t % 2 == 0) ? term : -term;
    }
    return a;
}

}  // namespace fakemu
