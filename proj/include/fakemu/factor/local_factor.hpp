#pragma once

#include <span>
#include <vector>

#include "fakemu/core/epsilon.hpp"
#include "fakemu/factor/bigint.hpp"

namespace fakemu {

// Truncated local power series 1 + sum_{j=start}^{J_max} eta_j X^j, where
// X stands for p^{-s} at a generic prime p.
class LocalFactor {
public:
    // `series[j]` is the coefficient of X^j for 0 <= j <= J_max; series[0]
    // must be 1 and entries 1..start-1 must vanish.
    LocalFactor(int start, std::vector<BigInt> series);

    // The Euler factor 1 + sum eps_j X^j of the fake mu itself.
    static LocalFactor from_epsilon(const EpsilonSequence& eps, int j_max);

    int start() const noexcept { return start_; }
    int j_max() const noexcept { return static_cast<int>(series_.size()) - 1; }

    // Coefficient of X^j, zero beyond J_max is NOT implied: j must be <= J_max.
    const BigInt& eta(int j) const;
    const std::vector<BigInt>& series() const noexcept { return series_; }

    // True when every stored coefficient past X^0 vanishes.
    bool is_one() const;

    friend bool operator==(const LocalFactor&, const LocalFactor&) = default;

private:
    int start_;
    std::vector<BigInt> series_;
};

struct FactorStep {
    BigInt exponent;
    LocalFactor next;
};

// Extracts zeta(ts)^{eta_t}: returns eta_t and the local factor of
// A(s) zeta(ts)^{-eta_t}, i.e. the series times (1 - X^t)^{eta_t}.
// Throws InvalidArgument when J_max < 2t.
FactorStep one_step_factor(const LocalFactor& local);

// In place: series <- series * (1 - X^t)^e, truncated at the series length.
void multiply_by_cyclotomic_power(std::vector<BigInt>& series, int t, const BigInt& e);

}  // namespace fakemu
