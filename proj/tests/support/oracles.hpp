#pragma once

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "fakemu/core/epsilon.hpp"
#include "fakemu/core/sieve.hpp"
#include "fakemu/factor/factorize.hpp"

namespace fakemu::testing {

using Big = boost::multiprecision::cpp_bin_float_50;

struct BigComplex {
    Big re, im;
};

inline BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
inline BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    const Big d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

// Zeta at 50 digits by Euler-Maclaurin with N = 80 and 24 Bernoulli terms.
inline std::complex<double> zeta_oracle(std::complex<double> s_in, int n_terms = 80, int order = 24) {
    const BigComplex s{Big(s_in.real()), Big(s_in.imag())};
    auto pow_minus_s = [&](int n) {
        const Big ln = log(Big(n));
        const Big mag = exp(-s.re * ln);
        return BigComplex{mag * cos(s.im * ln), -mag * sin(s.im * ln)};
    };
    BigComplex sum{0, 0};
    for (int n = 1; n < n_terms; ++n) sum = sum + pow_minus_s(n);
    const BigComplex nps = pow_minus_s(n_terms);
    const Big N(n_terms);
    sum = sum + BigComplex{N, 0} * nps / BigComplex{s.re - 1, s.im};
    sum = sum + BigComplex{nps.re / 2, nps.im / 2};
    BigComplex poch = s;  // (s)(s+1)...(s+2k-2)
    Big n_pow = 1 / N;    // N^{1-2k}
    Big factorial = 2;
    for (int k = 1; k <= order; ++k) {
        const Big coef = boost::math::bernoulli_b2n<Big>(k) / factorial * n_pow;
        sum = sum + BigComplex{coef, 0} * poch * nps;
        poch = poch * BigComplex{s.re + 2 * k - 1, s.im} * BigComplex{s.re + 2 * k, s.im};
        n_pow /= N * N;
        factorial *= Big(2 * k + 1) * Big(2 * k + 2);
    }
    return {sum.re.convert_to<double>(), sum.im.convert_to<double>()};
}

// prod_{j<=2l} zeta(js)^{a_j} with the oracle zeta.
inline std::complex<double> zeta_product_oracle(const ZetaFactorization& fz, std::complex<double> s) {
    std::complex<double> out = 1;
    for (int j = 1; j <= fz.order(); ++j) {
        const int a = fz.exponent(j).convert_to<int>();
        if (a != 0) out *= std::pow(zeta_oracle(static_cast<double>(j) * s), a);
    }
    return out;
}

// Coefficients of sum_i eps_i X^i * prod_{j<=2l} (1 - X^j)^{a_j} up to X^degree,
// by schoolbook multiplication and division.
inline std::vector<long double> local_u_series(const ZetaFactorization& fz, int degree) {
    std::vector<long double> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i) c[i] = fz.source.at(i);
    for (int j = 1; j <= fz.order(); ++j) {
        const int a = fz.exponent(j).convert_to<int>();
        for (int r = 0; r < std::abs(a); ++r) {
            if (a > 0) {
                for (int i = degree; i >= j; --i) c[i] -= c[i - j];
            } else {
                for (int i = j; i <= degree; ++i) c[i] += c[i - j];
            }
        }
    }
    return c;
}

// sum_{n <= limit} u(n) n^{-s} for the multiplicative u with local series
// local_u_series, enumerating (2l+1)-full n by depth-first search.
inline std::complex<long double> u_series_oracle(const ZetaFactorization& fz, std::complex<double> s,
                                                  long double limit = 1e15L) {
    const int m = fz.order() + 1;
    const int max_e = static_cast<int>(std::log2(static_cast<double>(limit))) + 1;
    const std::vector<long double> local = local_u_series(fz, max_e);
    const auto p_max = static_cast<std::uint64_t>(std::pow(static_cast<double>(limit), 1.0 / m)) + 1;
    std::vector<std::uint64_t> primes;
    std::vector<bool> composite(p_max + 1);
    for (std::uint64_t p = 2; p <= p_max; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = p * p; q <= p_max; q += p) composite[q] = true;
    }
    const std::complex<long double> sl(s.real(), s.imag());
    std::complex<long double> total = 0;
    std::function<void(std::size_t, long double, std::complex<long double>)> walk =
        [&](std::size_t from, long double n, std::complex<long double> term) {
            total += term;
            for (std::size_t i = from; i < primes.size(); ++i) {
                const long double p = static_cast<long double>(primes[i]);
                if (n * std::pow(p, static_cast<long double>(m)) > limit) break;
                const std::complex<long double> p_s = std::exp(-sl * std::log(p));
                long double pe = std::pow(p, static_cast<long double>(m));
                std::complex<long double> pe_s = std::pow(p_s, m);
                for (int e = m; e <= max_e && n * pe <= limit; ++e, pe *= p, pe_s *= p_s) {
                    if (local[e] != 0) walk(i + 1, n * pe, term * local[e] * pe_s);
                }
            }
        };
    walk(0, 1, 1);
    return total;
}

// sum_{n <= N} f(n) n^{-s} for several s, from one sieve pass.
inline std::vector<std::complex<double>> partial_dirichlet_sums(const EpsilonSequence& eps, std::uint64_t n_max,
                                                                const std::vector<std::complex<double>>& points) {
    const std::vector<std::int8_t> f = sieve_values(eps, n_max);
    std::vector<std::complex<long double>> sums(points.size());
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        if (f[n - 1] == 0) continue;
        const long double ln = std::log(static_cast<long double>(n));
        for (std::size_t k = 0; k < points.size(); ++k) {
            const long double mag = std::exp(-points[k].real() * ln);
            const long double ph = -points[k].imag() * ln;
            sums[k] += static_cast<long double>(f[n - 1]) * std::complex<long double>(mag * std::cos(ph), mag * std::sin(ph));
        }
    }
    std::vector<std::complex<double>> out;
    for (const auto& v : sums) out.emplace_back(static_cast<double>(v.real()), static_cast<double>(v.imag()));
    return out;
}

}  // namespace fakemu::testing
