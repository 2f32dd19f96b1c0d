#include "fakemu/factor/oracle.hpp"

#include "fakemu/core/errors.hpp"
#include "fakemu/core/sieve.hpp"

namespace fakemu {
namespace {

std::vector<std::uint32_t> smallest_prime_factors(std::uint64_t n) {
    std::vector<std::uint32_t> spf(n + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (spf[i]) continue;
        for (std::uint64_t j = i; j <= n; j += i) {
            if (!spf[j]) spf[j] = static_cast<std::uint32_t>(i);
        }
    }
    return spf;
}

// Coefficients of zeta(s)^a for m <= limit: the multiplicative function
// with value binom(a + e - 1, e) at p^e. a = 1 gives 1, a = -1 gives mu.
std::vector<BigInt> zeta_power_coefficients(const BigInt& a, std::uint64_t limit) {
    std::vector<BigInt> d(limit + 1, 0);
    if (limit >= 1) d[1] = 1;
    const auto spf = smallest_prime_factors(limit);
    std::vector<BigInt> local{1};
    for (std::uint64_t m = 2; m <= limit; ++m) {
        std::uint64_t p = spf[m], rest = m;
        std::size_t e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        while (local.size() <= e) {
            const std::size_t i = local.size();
            local.push_back(local.back() * (a + BigInt(i - 1)) / BigInt(i));
        }
        d[m] = d[rest] * local[e];
    }
    return d;
}

std::uint64_t ipow_capped(std::uint64_t b, int e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / b) return cap + 1;
        r *= b;
    }
    return r;
}

std::uint64_t integer_root(std::uint64_t n, int j) {
    std::uint64_t r = 1;
    while (ipow_capped(r + 1, j, n) <= n) ++r;
    return r;
}

void check_bound(std::uint64_t n_max, std::uint64_t bound) {
    if (n_max == 0) throw InvalidArgument("oracle: N must be positive");
    if (n_max > bound) {
        throw BudgetExceeded("oracle: N = " + std::to_string(n_max) + " exceeds bound " +
                             std::to_string(bound));
    }
}

}  // namespace

std::vector<BigInt> coefficients_of_factorization(const ZetaFactorization& fz, std::uint64_t n_max,
                                                  std::uint64_t bound) {
    check_bound(n_max, bound);
    std::vector<BigInt> c(n_max + 1, 0);
    c[1] = 1;

    for (int j = 1; j <= fz.order(); ++j) {
        const BigInt& a = fz.exponents[j];
        if (a.is_zero()) continue;
        const std::uint64_t root = integer_root(n_max, j);
        const std::vector<BigInt> d = zeta_power_coefficients(a, root);
        std::vector<BigInt> next(n_max + 1, 0);
        for (std::uint64_t m = 1; m <= root; ++m) {
            if (d[m].is_zero()) continue;
            const std::uint64_t step = ipow_capped(m, j, n_max);
            for (std::uint64_t q = 1; q * step <= n_max; ++q) {
                if (!c[q].is_zero()) next[q * step] += d[m] * c[q];
            }
        }
        c = std::move(next);
    }

    // U's coefficients live on (2l+1)-full numbers: enumerate them from
    // the prime powers p^e with e > 2l.
    const int start = fz.order() + 1;
    std::vector<std::pair<std::uint64_t, BigInt>> support{{1, BigInt(1)}};
    const auto spf = smallest_prime_factors(integer_root(n_max, start));
    for (std::uint64_t p = 2; p < spf.size(); ++p) {
        if (spf[p] != p) continue;
        const std::size_t existing = support.size();
        for (int e = start; e <= fz.j_max(); ++e) {
            const std::uint64_t pe = ipow_capped(p, e, n_max);
            if (pe > n_max) break;
            const BigInt& eta = fz.residual.eta(e);
            if (eta.is_zero()) continue;
            for (std::size_t i = 0; i < existing; ++i) {
                if (support[i].first <= n_max / pe) support.emplace_back(support[i].first * pe, support[i].second * eta);
            }
        }
    }
    if (support.size() > 1) {
        std::vector<BigInt> next(n_max + 1, 0);
        for (const auto& [d, u] : support) {
            for (std::uint64_t q = 1; q * d <= n_max; ++q) {
                if (!c[q].is_zero()) next[q * d] += u * c[q];
            }
        }
        c = std::move(next);
    }
    return c;
}

VerifyReport verify_factorization(const EpsilonSequence& eps, const ZetaFactorization& fz,
                                  std::uint64_t n_max, std::uint64_t bound) {
    VerifyReport report;
    const auto coeffs = coefficients_of_factorization(fz, n_max, bound);
    const auto values = sieve_values(eps, n_max);

    // n divisible by p^{J_max+1} depends on coefficients the residual does
    // not store.
    std::vector<bool> unsound(n_max + 1, false);
    for (std::uint64_t p = 2; ipow_capped(p, fz.j_max() + 1, n_max) <= n_max; ++p) {
        const std::uint64_t pe = ipow_capped(p, fz.j_max() + 1, n_max);
        for (std::uint64_t m = pe; m <= n_max; m += pe) unsound[m] = true;
    }

    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (unsound[n]) {
            ++report.skipped;
            continue;
        }
        ++report.checked;
        if (coeffs[n] != values[n - 1]) {
            report.ok = false;
            report.first_mismatch = n;
            break;
        }
    }
    if (report.skipped) {
        report.note = std::to_string(report.skipped) + " values divisible by a (J_max+1)-th power skipped";
    }
    return report;
}

}  // namespace fakemu
