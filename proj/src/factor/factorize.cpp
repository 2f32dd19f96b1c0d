#include "fakemu/factor/factorize.hpp"

#include <algorithm>
#include <cmath>

#include "fakemu/core/errors.hpp"
#include "fakemu/factor/algorithm.hpp"

namespace fakemu {
namespace {

std::vector<BigInt> epsilon_series(const EpsilonSequence& eps, int order) {
    std::vector<BigInt> s(static_cast<std::size_t>(order) + 1);
    for (int j = 0; j <= order; ++j) s[j] = eps.at(j);
    return s;
}

std::vector<BigInt> apply_exponents(std::vector<BigInt> series, const std::vector<BigInt>& a) {
    for (int j = 1; j < static_cast<int>(a.size()); ++j) multiply_by_cyclotomic_power(series, j, a[j]);
    return series;
}

FactorizationCore eliminate(const EpsilonSequence& eps, int work, int cap) {
    FactorizationCore out;
    LocalFactor local = LocalFactor::from_epsilon(eps, work);
    out.exponents.push_back(0);
    for (int t = 1;; ++t) {
        if (out.critical_index == 0 && t > cap) {
            throw BudgetExceeded("critical index exceeds cap " + std::to_string(cap));
        }
        if (2 * t > work) return out;  // caller retries with a longer series
        FactorStep step = one_step_factor(local);
        if (out.critical_index == 0 && step.exponent < 0) out.critical_index = t;
        if (out.critical_index == 0 && step.exponent > 0) out.principal_indices.push_back(t);
        out.exponents.push_back(std::move(step.exponent));
        local = std::move(step.next);
        if (out.critical_index != 0 && t == 2 * out.critical_index) {
            out.residual = local.series();
            return out;
        }
    }
}

int default_j_max(int requested, int ell) {
    if (requested <= 0) return std::max(2 * ell + 16, 64);
    return std::max(requested, 2 * ell + 8);
}

TailBound tail_bound_for(const Classification& type, int ell, std::size_t principal_count) {
    if (type.kind == Kind::MobiusType) return {2.0, 2.0 * (type.k + 1)};
    // 2^M (2j 2^{2M+1})^{4^{M+1}(l+1)} <= (2^{2M+3} j)^{4^{M+1}(l+1)}
    const double m = static_cast<double>(principal_count);
    return {std::pow(2.0, 2 * m + 3), std::pow(4.0, m + 1) * (ell + 1)};
}

}  // namespace

BigInt ZetaFactorization::exponent(int j) const {
    if (j < 1 || j >= static_cast<int>(exponents.size())) return 0;
    return exponents[static_cast<std::size_t>(j)];
}

FactorizationCore factorize_by_elimination(const EpsilonSequence& eps, int j_max, int cap) {
    if (classify(eps).trivial()) throw InvalidArgument("factorize: trivial fake mu");
    int work = std::max(j_max, 64);
    for (;;) {
        FactorizationCore core = eliminate(eps, work, cap);
        if (core.critical_index != 0 && !core.residual.empty()) {
            core.residual.resize(static_cast<std::size_t>(default_j_max(j_max, core.critical_index)) + 1);
            if (static_cast<int>(core.residual.size()) - 1 > work) {
                // The requested truncation exceeds the working series.
                work = static_cast<int>(core.residual.size()) - 1;
                continue;
            }
            return core;
        }
        // l not yet seen, or seen without room to extract up to 2l.
        work = core.critical_index ? 4 * core.critical_index : 2 * work;
    }
}

FactorizationCore factorize_by_formula(const EpsilonSequence& eps, int j_max, int cap) {
    const Classification cls = classify(eps);
    if (cls.trivial()) throw InvalidArgument("factorize: trivial fake mu");

    FactorizationCore out;
    if (cls.kind == Kind::MobiusType) {
        const int k = cls.k;
        if (k > cap) throw BudgetExceeded("critical index exceeds cap " + std::to_string(cap));
        out.critical_index = k;
        out.exponents.assign(static_cast<std::size_t>(2 * k) + 1, 0);
        for (int j = k; j <= 2 * k; ++j) out.exponents[j] = eps.at(j);
    } else {
        const AlgorithmResult alg = run_algorithm1(eps, cap);
        const int ell = alg.critical_index;
        out.critical_index = ell;
        out.principal_indices = alg.principal_indices;
        out.exponents.assign(static_cast<std::size_t>(2 * ell) + 1, 0);
        const std::vector<BigInt> theta = signed_subset_sums(eps, alg.principal_indices, 2 * ell);
        for (int c : alg.principal_indices) out.exponents[c] = 1;
        const BigInt lead = BigInt(alg.eps_critical) - alg.n_critical;
        out.exponents[ell] = lead;
        for (int j = ell + 1; j < 2 * ell; ++j) out.exponents[j] = theta[j];
        out.exponents[2 * ell] = theta[2 * ell] - (lead * lead + lead) / 2;
    }

    const int top = default_j_max(j_max, out.critical_index);
    out.residual = apply_exponents(epsilon_series(eps, top), out.exponents);
    for (int j = 1; j <= 2 * out.critical_index; ++j) {
        if (!out.residual[j].is_zero()) {
            throw ConsistencyError("closed-form exponents leave a nonzero coefficient at X^" +
                                   std::to_string(j));
        }
    }
    return out;
}

ZetaFactorization factorize(const EpsilonSequence& eps, FactorizeOptions options) {
    const Classification cls = classify(eps);
    if (cls.trivial()) throw InvalidArgument("factorize: trivial fake mu");

    FactorizationCore formula = factorize_by_formula(eps, options.j_max, options.critical_cap);
    FactorizationCore elimination = factorize_by_elimination(eps, options.j_max, options.critical_cap);
    if (!(formula == elimination)) {
        throw ConsistencyError("elimination and closed-form factorizations disagree for " +
                               eps.to_string());
    }

    const int ell = formula.critical_index;
    const TailBound bound = tail_bound_for(cls, ell, formula.principal_indices.size());
    return ZetaFactorization{eps,
                             cls,
                             ell,
                             std::move(formula.principal_indices),
                             std::move(formula.exponents),
                             LocalFactor(2 * ell + 1, std::move(formula.residual)),
                             bound};
}

std::vector<BigInt> residual_series(const ZetaFactorization& fz, int order) {
    return apply_exponents(epsilon_series(fz.source, order), fz.exponents);
}

ZetaExtension extend_factorization(const ZetaFactorization& fz, int order, int work) {
    if (work < order) throw InvalidArgument("extension needs work >= order");
    ZetaExtension ext;
    ext.exponents.assign(static_cast<std::size_t>(order) + 1, 0);
    ext.remainder = residual_series(fz, work);
    for (int t = fz.order() + 1; t <= order; ++t) {
        ext.exponents[t] = ext.remainder[t];
        multiply_by_cyclotomic_power(ext.remainder, t, ext.exponents[t]);
    }
    return ext;
}

EpsilonGeneratingFunction generating_function(const EpsilonSequence& eps) {
    // sum eps_j X^j = P(X) + X^L Q(X) / (1 - X^q), with P the prefix part
    // (including eps_0 = 1) and Q the period block.
    const int len = static_cast<int>(eps.prefix().size());
    const int q = static_cast<int>(eps.period().size());
    std::vector<BigInt> num(static_cast<std::size_t>(len + q) + 1, 0);
    for (int j = 0; j <= len; ++j) {
        num[j] += eps.at(j);
        num[j + q] -= eps.at(j);
    }
    for (int i = 1; i <= q; ++i) num[len + i] += eps.period()[i - 1];
    return {std::move(num), q};
}

bool factors_exactly(const EpsilonSequence& eps, std::span<const BigInt> exponents, int degree_cap) {
    EpsilonGeneratingFunction gf = generating_function(eps);
    std::vector<BigInt> num = std::move(gf.numerator);
    std::vector<BigInt> den(static_cast<std::size_t>(gf.q) + 1, 0);
    den[0] = 1;
    den[gf.q] = -1;

    auto grow = [&](std::vector<BigInt>& poly, int j, const BigInt& e) {
        const BigInt extra = BigInt(j) * e;
        if (extra + poly.size() > degree_cap) return false;
        poly.resize(poly.size() + extra.convert_to<std::size_t>(), 0);
        multiply_by_cyclotomic_power(poly, j, e);
        return true;
    };
    for (std::size_t j = 1; j < exponents.size(); ++j) {
        const BigInt& a = exponents[j];
        if (a > 0 && !grow(num, static_cast<int>(j), a)) return false;
        if (a < 0 && !grow(den, static_cast<int>(j), -a)) return false;
    }
    while (!num.empty() && num.back().is_zero()) num.pop_back();
    while (!den.empty() && den.back().is_zero()) den.pop_back();
    return num == den;
}

bool residual_is_identically_one(const ZetaFactorization& fz, int degree_cap) {
    const std::span<const BigInt> a(fz.exponents);
    return factors_exactly(fz.source, a.first(std::min<std::size_t>(a.size(), fz.order() + 1)), degree_cap);
}

}  // namespace fakemu
