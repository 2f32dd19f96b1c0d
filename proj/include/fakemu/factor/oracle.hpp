#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fakemu/core/epsilon.hpp"
#include "fakemu/factor/factorize.hpp"

namespace fakemu {

constexpr std::uint64_t kDefaultOracleBound = 1'000'000;

// Dirichlet coefficients of prod_{j<=2l} zeta(js)^{a_j} * U(s) for
// 1 <= n <= N, by exact convolution. Entry 0 is unused. Prime powers
// beyond the stored residual are treated as having eta = 0.
std::vector<BigInt> coefficients_of_factorization(const ZetaFactorization& fz, std::uint64_t n_max,
                                                  std::uint64_t bound = kDefaultOracleBound);

struct VerifyReport {
    bool ok = true;
    std::optional<std::uint64_t> first_mismatch;
    std::uint64_t checked = 0;
    std::uint64_t skipped = 0;  // n divisible by p^{J_max+1}
    std::string note;
};

VerifyReport verify_factorization(const EpsilonSequence& eps, const ZetaFactorization& fz,
                                  std::uint64_t n_max, std::uint64_t bound = kDefaultOracleBound);

}  // namespace fakemu
