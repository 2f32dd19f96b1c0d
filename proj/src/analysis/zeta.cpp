#include "fakemu/analysis/zeta.hpp"

#include <array>
#include <cmath>

#include "fakemu/core/errors.hpp"

namespace fakemu {
namespace {

constexpr int kMaxOrder = 20;

// B_{2k} as numerator/denominator, k = 1..20.
constexpr std::array<std::pair<long double, long double>, kMaxOrder> kBernoulli{{
    {1.0L, 6.0L},
    {-1.0L, 30.0L},
    {1.0L, 42.0L},
    {-1.0L, 30.0L},
    {5.0L, 66.0L},
    {-691.0L, 2730.0L},
    {7.0L, 6.0L},
    {-3617.0L, 510.0L},
    {43867.0L, 798.0L},
    {-174611.0L, 330.0L},
    {854513.0L, 138.0L},
    {-236364091.0L, 2730.0L},
    {8553103.0L, 6.0L},
    {-23749461029.0L, 870.0L},
    {8615841276005.0L, 14322.0L},
    {-7709321041217.0L, 510.0L},
    {2577687858367.0L, 6.0L},
    {-26315271553053477373.0L, 1919190.0L},
    {2929993913841559.0L, 6.0L},
    {-261082718496449122051.0L, 13530.0L},
}};

// B_{2k} / (2k)!
const std::array<long double, kMaxOrder>& bernoulli_over_factorial() {
    static const auto table = [] {
        std::array<long double, kMaxOrder> t{};
        long double fact = 1.0L;
        for (int k = 1; k <= kMaxOrder; ++k) {
            fact *= static_cast<long double>(2 * k - 1) * (2 * k);
            t[k - 1] = kBernoulli[k - 1].first / kBernoulli[k - 1].second / fact;
        }
        return t;
    }();
    return table;
}

void check_options(const ZetaOptions& o) {
    if (o.terms < 2 || o.order < 0 || o.order > kMaxOrder) throw InvalidArgument("zeta: bad options");
}

// log Gamma(z) for Re z > 0, continuous branch.
std::complex<long double> log_gamma(std::complex<long double> z) {
    std::complex<long double> shift = 0;
    while (z.real() < 16) {
        shift += std::log(z);
        z += 1.0L;
    }
    const auto& c = bernoulli_over_factorial();
    // Stirling: (z - 1/2) log z - z + log(2 pi)/2 + sum B_{2k} / (2k (2k-1) z^{2k-1}).
    std::complex<long double> s = (z - 0.5L) * std::log(z) - z + 0.5L * std::log(2 * std::acos(-1.0L));
    const std::complex<long double> inv = 1.0L / z, inv2 = inv * inv;
    std::complex<long double> p = inv;
    long double fact = 1.0L;
    for (int k = 1; k <= 10; ++k) {
        fact *= static_cast<long double>(2 * k - 1) * (2 * k);
        // B_{2k}/(2k(2k-1)) = (B_{2k}/(2k)!) (2k-2)!
        const long double coeff = c[k - 1] * fact / (static_cast<long double>(2 * k) * (2 * k - 1));
        s += coeff * p;
        p *= inv2;
    }
    return s - shift;
}

}  // namespace

ComplexLD log1p(ComplexLD z) {
    // |1+z|^2 - 1 = 2x + x^2 + y^2 keeps full accuracy for small z.
    const long double x = z.real(), y = z.imag();
    return {0.5L * std::log1p(2 * x + x * x + y * y), std::atan2(y, 1 + x)};
}

ComplexLD euler_maclaurin_tail(ComplexLD s, ComplexLD n_pow_minus_s, int n, int order) {
    const long double N = n;
    ComplexLD tail = n_pow_minus_s * N / (s - 1.0L) + 0.5L * n_pow_minus_s;
    const auto& c = bernoulli_over_factorial();
    // term_k = (s)_{2k-1} N^{-s-2k+1}
    ComplexLD term = s * n_pow_minus_s / N;
    for (int k = 1; k <= order; ++k) {
        tail += c[k - 1] * term;
        term *= (s + static_cast<long double>(2 * k - 1)) * (s + static_cast<long double>(2 * k)) / (N * N);
    }
    return tail;
}

ComplexLD zeta_minus_one(ComplexLD s, ZetaOptions options) {
    check_options(options);
    if (s == ComplexLD(1.0L, 0.0L)) throw DomainError("zeta: pole at s = 1");
    if (s.real() <= -2.0L) throw DomainError("zeta: Re(s) <= -2 is outside the supported region");
    ComplexLD sum = 0;
    for (int n = 2; n < options.terms; ++n) sum += std::exp(-s * std::log(static_cast<long double>(n)));
    const ComplexLD last = std::exp(-s * std::log(static_cast<long double>(options.terms)));
    return sum + euler_maclaurin_tail(s, last, options.terms, options.order);
}

Complex zeta(Complex s, ZetaOptions options) {
    const ComplexLD z = 1.0L + zeta_minus_one(ComplexLD(s.real(), s.imag()), options);
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

double riemann_siegel_theta(double t) {
    const auto lg = log_gamma({0.25L, static_cast<long double>(t) / 2});
    return static_cast<double>(lg.imag() - static_cast<long double>(t) / 2 * std::log(std::acos(-1.0L)));
}

double hardy_z(double t) {
    const long double theta = static_cast<long double>(riemann_siegel_theta(t));
    const ComplexLD z = 1.0L + zeta_minus_one({0.5L, static_cast<long double>(t)});
    return static_cast<double>((std::polar(1.0L, theta) * z).real());
}

ZeroOfZeta first_zero() {
    double lo = 14.0, hi = 14.5;
    double zlo = hardy_z(lo);
    const double zhi = hardy_z(hi);
    if (!(zlo * zhi < 0)) throw NumericFailure("first_zero: no sign change of Z on [14, 14.5]");
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        const double zmid = hardy_z(mid);
        if (zmid == 0) {
            lo = hi = mid;
            break;
        }
        if ((zmid < 0) == (zlo < 0)) {
            lo = mid;
            zlo = zmid;
        } else {
            hi = mid;
        }
    }
    const double gamma = 0.5 * (lo + hi);
    return {gamma, {0.5, gamma}};
}

}  // namespace fakemu
