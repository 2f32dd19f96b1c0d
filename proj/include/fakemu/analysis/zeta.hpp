#pragma once

#include <complex>

namespace fakemu {

using Complex = std::complex<double>;
using ComplexLD = std::complex<long double>;

struct ZetaOptions {
    int terms = 40;  // N: the leading sum runs over n < N
    int order = 12;  // number of Bernoulli correction terms
};

// Riemann zeta by Euler-Maclaurin summation, computed in long double.
// Throws DomainError at s = 1 and for Re(s) <= -2.
Complex zeta(Complex s, ZetaOptions options = {});

// zeta(s) - 1 with full relative accuracy for large Re(s).
ComplexLD zeta_minus_one(ComplexLD s, ZetaOptions options = {});

// The Euler-Maclaurin remainder past n = N - 1 given N^{-s}:
// N^{1-s}/(s-1) + N^{-s}/2 + sum_k B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.
ComplexLD euler_maclaurin_tail(ComplexLD s, ComplexLD n_pow_minus_s, int n, int order);

// log(1 + z), accurate for small |z|.
ComplexLD log1p(ComplexLD z);

// Riemann-Siegel theta and Hardy's Z(t) = exp(i theta(t)) zeta(1/2 + it).
double riemann_siegel_theta(double t);
double hardy_z(double t);

struct ZeroOfZeta {
    double gamma_1;
    Complex rho_1;
};

// Lowest zero on the critical line, bracketed in [14, 14.5] by a sign
// change of Z and bisected. Throws NumericFailure if the bracket fails.
ZeroOfZeta first_zero();

}  // namespace fakemu
