#include "fakemu/analysis/euler_product.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>

#include "fakemu/core/errors.hpp"

namespace fakemu {
namespace {

constexpr int kExactProbe = 128;
constexpr int kExactWork = 192;
constexpr int kMaxIndex = 600;
constexpr int kLookahead = 64;
constexpr int kZetaTerms = 40;
constexpr int kZetaOrder = 12;
constexpr std::array<long, 11> kPrimeLadder{50, 100, 200, 500, 1000, 2000, 5000, 10000, 20000, 50000, 100000};
constexpr long double kUnitRoundoff = std::numeric_limits<long double>::epsilon();

std::vector<long> primes_up_to(long n) {
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    std::vector<long> out;
    for (long i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (long m = i * i; m <= n; m += i) composite[m] = true;
    }
    return out;
}

std::vector<int> moebius_up_to(int n) {
    std::vector<int> mu(static_cast<std::size_t>(n) + 1, 1);
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    mu[0] = 0;
    for (int p = 2; p <= n; ++p) {
        if (composite[p]) continue;
        for (int m = p; m <= n; m += p) {
            if (m > p) composite[m] = true;
            mu[m] = -mu[m];
        }
        for (long m = static_cast<long>(p) * p; m <= n; m += static_cast<long>(p) * p) mu[m] = 0;
    }
    return mu;
}

long double to_ld(const BigInt& x) { return x.convert_to<long double>(); }

// Upper bound for zeta(x) - 1, x > 1.
long double zeta_excess_bound(long double x) {
    if (x >= 2) return std::pow(2.0L, -x) * (1 + 2 / (x - 1));
    return zeta_minus_one(ComplexLD(x, 0), {kZetaTerms, kZetaOrder}).real();
}

}  // namespace

DirichletSeriesEvaluator::DirichletSeriesEvaluator(const ZetaFactorization& fz, double sigma_min, double tol)
    : order_(fz.order()) {
    if (!(tol > 0)) throw InvalidArgument("evaluator: tol must be positive");
    if (!(sigma_min > 1.0 / (order_ + 1)))
        throw DomainError("evaluator: sigma_min must exceed 1/(2l+1)");
    plan_.sigma_min = sigma_min;
    const long double sigma = sigma_min;

    a_.assign(static_cast<std::size_t>(order_) + 1, 0);
    long double a_weight = 0;
    for (int j = 1; j <= order_; ++j) {
        a_[j] = to_ld(fz.exponent(j));
        a_weight += std::fabs(a_[j]);
    }
    const EpsilonGeneratingFunction gf = generating_function(fz.source);
    for (const BigInt& c : gf.numerator) numerator_.push_back(to_ld(c));
    q_ = gf.q;
    const long double base_rounding = 64 * kUnitRoundoff * (1 + a_weight);

    auto finish_exact = [&](int J, const std::vector<BigInt>& exps, long double error) {
        plan_.exact = true;
        plan_.extension_order = J;
        plan_.zeta_terms = std::max(J, order_);
        plan_.error_bound = static_cast<double>(error);
        b_.assign(static_cast<std::size_t>(J) + 1, 0);
        for (int j = order_ + 1; j <= J; ++j) b_[j] = to_ld(exps[j]);
    };

    if (residual_is_identically_one(fz)) {
        finish_exact(order_, {}, base_rounding);
        return;
    }
    {
        // U may still be a finite product of zeta(js), detected exactly.
        std::vector<BigInt> rem = residual_series(fz, kExactWork);
        std::vector<BigInt> exps = fz.exponents;
        exps.resize(static_cast<std::size_t>(order_) + 1);
        long double weight = a_weight;
        for (int t = order_ + 1; t <= kExactProbe; ++t) {
            const BigInt bt = rem[t];
            exps.push_back(bt);
            if (bt.is_zero()) continue;
            multiply_by_cyclotomic_power(rem, t, bt);
            weight += std::fabs(to_ld(bt));
            const bool tail_zero =
                std::all_of(rem.begin() + t + 1, rem.end(), [](const BigInt& c) { return c.is_zero(); });
            if (tail_zero && factors_exactly(fz.source, exps)) {
                finish_exact(t, exps, 64 * kUnitRoundoff * (1 + weight));
                return;
            }
        }
    }

    // Log coefficients: c_i = i w_i satisfies c_i = i eta_i - sum_{k<i} c_k eta_{i-k}.
    const int top = kMaxIndex + kLookahead;
    const std::vector<BigInt> eta = residual_series(fz, top);
    std::vector<BigInt> c(static_cast<std::size_t>(top) + 1, 0);
    std::vector<long double> w(static_cast<std::size_t>(top) + 1, 0), wabs(w.size(), 0);
    for (int i = order_ + 1; i <= top; ++i) {
        BigInt acc = BigInt(i) * eta[i];
        for (int k = order_ + 1; k + order_ + 1 <= i; ++k) {
            if (c[k].is_zero() || eta[i - k].is_zero()) continue;
            acc -= c[k] * eta[i - k];
        }
        c[i] = acc;
        w[i] = to_ld(acc) / i;
        wabs[i] = std::fabs(w[i]);
    }

    // Moebius terms K_i for P(is) = sum_k mu(k)/k log zeta(kis).
    std::vector<int> K(static_cast<std::size_t>(kMaxIndex) + 1, 0);
    std::vector<long double> excess(static_cast<std::size_t>(top) + 1, 0);
    for (int i = order_ + 1; i <= top; ++i) excess[i] = zeta_excess_bound(i * sigma);
    for (int i = order_ + 1; i <= kMaxIndex; ++i) {
        if (wabs[i] == 0) continue;
        int k = 1;
        while (wabs[i] * 2 * zeta_excess_bound((k + 1) * i * sigma) > 1e-4L * tol) ++k;
        K[i] = k;
    }
    std::vector<long double> rounding(static_cast<std::size_t>(kMaxIndex) + 1, base_rounding);
    for (int i = order_ + 1; i <= kMaxIndex; ++i)
        rounding[i] = rounding[i - 1] + 8 * kUnitRoundoff * wabs[i] * excess[i] * (i + 10) * (K[i] + 1);

    int log_count = 2;
    for (int j = 1; j <= order_; ++j) log_count += a_[j] != 0;
    const std::vector<long> all_primes = primes_up_to(kPrimeLadder.back());

    struct Choice {
        long P;
        int I;
        long double error;
        long double cost;
    };
    std::optional<Choice> best;
    for (long P : kPrimeLadder) {
        const long double logP = std::log(static_cast<long double>(P));
        std::vector<long double> term(static_cast<std::size_t>(top) + 2, 0);
        for (int i = order_ + 1; i <= top; ++i) {
            const long double e = i * sigma;
            term[i] = wabs[i] * std::exp((1 - e) * logP) / (e - 1);
        }
        if (term[top] > 1e-6L * tol) continue;
        std::vector<long double> tail(static_cast<std::size_t>(top) + 2, 0);
        for (int i = top; i >= 0; --i) tail[i] = tail[i + 1] + term[i + 1];
        const long double count = static_cast<long double>(
            std::upper_bound(all_primes.begin(), all_primes.end(), P) - all_primes.begin());
        int zeta_terms = order_;
        long double moebius_work = 0;
        for (int I = order_ + 1; I <= kMaxIndex; ++I) {
            zeta_terms = std::max(zeta_terms, I * K[I]);
            moebius_work += K[I];
            const long double error = 2 * tail[I] + rounding[I];
            if (rounding[I] > tol) break;
            if (error >= tol) continue;
            const long double cost =
                count * ((I - order_) + 12 * log_count) + 20.0L * zeta_terms + moebius_work;
            if (!best || cost < best->cost) best = Choice{P, I, error, cost};
            break;
        }
    }
    if (!best) throw NumericFailure("evaluator: tol unachievable within the extension budget");

    const int I = best->I;
    plan_.extension_order = I;
    plan_.prime_bound = best->P;
    plan_.error_bound = static_cast<double>(best->error);
    w_.assign(w.begin(), w.begin() + I + 1);
    moebius_terms_.assign(K.begin(), K.begin() + I + 1);
    int zeta_terms = order_;
    int kmax = 1;
    for (int i = order_ + 1; i <= I; ++i) {
        zeta_terms = std::max(zeta_terms, i * K[i]);
        kmax = std::max(kmax, K[i]);
    }
    plan_.zeta_terms = zeta_terms;
    moebius_ = moebius_up_to(kmax);
    for (long p : all_primes) {
        if (p > best->P) break;
        primes_.push_back(p);
    }
}

void DirichletSeriesEvaluator::check_point(Complex s) const {
    if (!(s.real() >= plan_.sigma_min - 1e-15))
        throw DomainError("evaluator: Re(s) below the planned convergence bound");
}

std::vector<ComplexLD> DirichletSeriesEvaluator::log_zeta_table(ComplexLD s, int count) const {
    std::vector<ComplexLD> out(static_cast<std::size_t>(count) + 1, 0);
    std::array<ComplexLD, kZetaTerms + 1> base{}, pw{};
    for (int n = 2; n <= kZetaTerms; ++n) {
        base[n] = std::exp(-s * std::log(static_cast<long double>(n)));
        pw[n] = 1;
    }
    // Terms n^{-ms} below 1e-24 relative to 2^{-ms} are dropped once m is large.
    int active = kZetaTerms;
    for (int m = 1; m <= count; ++m) {
        const long double decay = m * s.real();
        while (active > 2 && decay * std::log(active / 2.0L) > 56) --active;
        for (int n = 2; n <= active; ++n) pw[n] *= base[n];
        ComplexLD sum = 0;
        if (active == kZetaTerms) {
            for (int n = kZetaTerms - 1; n >= 2; --n) sum += pw[n];
            sum += euler_maclaurin_tail(s * static_cast<long double>(m), pw[kZetaTerms], kZetaTerms, kZetaOrder);
        } else {
            for (int n = active; n >= 2; --n) sum += pw[n];
        }
        out[m] = log1p(sum);
    }
    return out;
}

ComplexLD DirichletSeriesEvaluator::log_U_from(ComplexLD s, const std::vector<ComplexLD>& L) const {
    ComplexLD total = 0;
    if (plan_.exact) {
        for (std::size_t j = 1; j < b_.size(); ++j)
            if (b_[j] != 0) total += b_[j] * L[j];
        return total;
    }
    const int I = plan_.extension_order;
    std::vector<ComplexLD> small(static_cast<std::size_t>(I) + 1, 0);
    for (long p : primes_) {
        const ComplexLD x = std::exp(-s * std::log(static_cast<long double>(p)));
        ComplexLD n_minus_one = 0;
        for (std::size_t i = numerator_.size() - 1; i >= 1; --i) n_minus_one = (n_minus_one + numerator_[i]) * x;
        ComplexLD lg = log1p(n_minus_one);
        ComplexLD xj = 1;
        const int reach = std::max(order_, q_);
        for (int j = 1; j <= reach; ++j) {
            xj *= x;
            if (j == q_) lg -= log1p(-xj);
            if (j <= order_ && a_[j] != 0) lg += a_[j] * log1p(-xj);
        }
        total += lg;
        ComplexLD xi = 1;
        for (int i = 1; i <= order_; ++i) xi *= x;
        for (int i = order_ + 1; i <= I; ++i) {
            xi *= x;
            small[i] += xi;
        }
    }
    for (int i = order_ + 1; i <= I; ++i) {
        if (w_[i] == 0) continue;
        ComplexLD prime_zeta = 0;
        for (int k = 1; k <= moebius_terms_[i]; ++k)
            if (moebius_[k] != 0) prime_zeta += static_cast<long double>(moebius_[k]) / k * L[i * k];
        total += w_[i] * (prime_zeta - small[i]);
    }
    return total;
}

ComplexLD DirichletSeriesEvaluator::log_U(Complex s) const {
    check_point(s);
    const ComplexLD z(s.real(), s.imag());
    return log_U_from(z, log_zeta_table(z, plan_.zeta_terms));
}

ComplexLD DirichletSeriesEvaluator::log_D(Complex s) const {
    check_point(s);
    for (int j = 1; j <= order_; ++j) {
        if (a_[j] > 0 && std::abs(Complex(j, 0) * s - 1.0) < 1e-14)
            throw DomainError("evaluate_Df: pole at s = 1/" + std::to_string(j));
    }
    const ComplexLD z(s.real(), s.imag());
    const std::vector<ComplexLD> L = log_zeta_table(z, plan_.zeta_terms);
    ComplexLD total = log_U_from(z, L);
    for (int j = 1; j <= order_; ++j)
        if (a_[j] != 0) total += a_[j] * L[j];
    return total;
}

Complex DirichletSeriesEvaluator::U(Complex s) const {
    const ComplexLD v = std::exp(log_U(s));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

Complex DirichletSeriesEvaluator::D(Complex s) const {
    const ComplexLD v = std::exp(log_D(s));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

namespace {

double checked_sigma(const ZetaFactorization& fz, Complex s, double margin) {
    const double bound = 1.0 / (fz.order() + 1) + margin;
    if (!(s.real() > bound)) throw DomainError("Re(s) must exceed 1/(2l+1) + margin");
    return s.real();
}

}  // namespace

Complex evaluate_U(const ZetaFactorization& fz, Complex s, double tol, double margin) {
    return DirichletSeriesEvaluator(fz, checked_sigma(fz, s, margin), tol).U(s);
}

Complex evaluate_Df(const ZetaFactorization& fz, Complex s, double tol, double margin) {
    return DirichletSeriesEvaluator(fz, checked_sigma(fz, s, margin), tol).D(s);
}

}  // namespace fakemu
