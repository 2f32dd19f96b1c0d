#pragma once

#include <array>

namespace fakemu {

struct GapCheck {
    double min_margin = 0;
    std::array<int, 4> argmin{};  // (eps_3, eps_4, eps_5, eps_6)
    double tail_constant = 0;     // 1/(4 sqrt 2 - 4)
    double gamma_1 = 0;
};

// Minimum over (eps_3..eps_6) in {-1,0,1}^4 of
// |1 + (1+eps_3) 2^{-3 rho} + sum_{j=4}^6 (eps_{j-1}+eps_j) 2^{-j rho}| - 1/(4 sqrt 2 - 4)
// at the lowest zero rho of zeta in the upper half-plane.
GapCheck gap_check();

// 1 - 2/(3 sqrt 3 - 3), the matching bound for the Euler factors at p >= 3.
double odd_prime_gap_bound();

}  // namespace fakemu
