#include "fakemu/analysis/gap.hpp"

#include <cmath>
#include <complex>
#include <limits>

#include "fakemu/analysis/zeta.hpp"

namespace fakemu {

GapCheck gap_check() {
    const ZeroOfZeta zero = first_zero();
    GapCheck out;
    out.gamma_1 = zero.gamma_1;
    out.tail_constant = 1.0 / (4 * std::sqrt(2.0) - 4);
    std::array<Complex, 7> w{};
    for (int j = 3; j <= 6; ++j) w[j] = std::exp(-static_cast<double>(j) * zero.rho_1 * std::log(2.0));
    out.min_margin = std::numeric_limits<double>::infinity();
    for (int e3 = -1; e3 <= 1; ++e3)
        for (int e4 = -1; e4 <= 1; ++e4)
            for (int e5 = -1; e5 <= 1; ++e5)
                for (int e6 = -1; e6 <= 1; ++e6) {
                    const std::array<int, 7> e{0, 0, 0, e3, e4, e5, e6};
                    Complex z = 1.0 + (1.0 + e3) * w[3];
                    for (int j = 4; j <= 6; ++j) z += static_cast<double>(e[j - 1] + e[j]) * w[j];
                    const double margin = std::abs(z) - out.tail_constant;
                    if (margin < out.min_margin) {
                        out.min_margin = margin;
                        out.argmin = {e3, e4, e5, e6};
                    }
                }
    return out;
}

double odd_prime_gap_bound() { return 1.0 - 2.0 / (3 * std::sqrt(3.0) - 3); }

}  // namespace fakemu
