#include "fakemu/factor/local_factor.hpp"

#include "fakemu/core/errors.hpp"

namespace fakemu {
namespace {

// Beyond this many repeated single-factor passes, expand the power as one
// sparse series instead.
const BigInt kRepeatLimit = 64;

// series <- series * sum_m c_m X^{tm}
void multiply_sparse(std::vector<BigInt>& series, int t, const std::vector<BigInt>& c) {
    const int n = static_cast<int>(series.size());
    for (int j = n - 1; j >= 0; --j) {
        BigInt acc = 0;
        for (int m = 0; m < static_cast<int>(c.size()) && m * t <= j; ++m) {
            if (!c[m].is_zero() && !series[j - m * t].is_zero()) acc += c[m] * series[j - m * t];
        }
        series[j] = std::move(acc);
    }
}

}  // namespace

LocalFactor::LocalFactor(int start, std::vector<BigInt> series)
    : start_(start), series_(std::move(series)) {
    if (series_.empty() || series_[0] != 1) throw InvalidArgument("local factor must start with 1");
    if (start_ < 1 || start_ > j_max()) throw InvalidArgument("local factor start out of range");
    for (int j = 1; j < start_; ++j) {
        if (!series_[j].is_zero()) throw InvalidArgument("local factor has a coefficient below start");
    }
}

LocalFactor LocalFactor::from_epsilon(const EpsilonSequence& eps, int j_max) {
    if (j_max < 1) throw InvalidArgument("local factor needs J_max >= 1");
    std::vector<BigInt> series(static_cast<std::size_t>(j_max) + 1);
    for (int j = 0; j <= j_max; ++j) series[j] = eps.at(j);
    return LocalFactor(1, std::move(series));
}

const BigInt& LocalFactor::eta(int j) const {
    if (j < 0 || j > j_max()) throw InvalidArgument("local factor index beyond truncation");
    return series_[static_cast<std::size_t>(j)];
}

bool LocalFactor::is_one() const {
    for (std::size_t j = 1; j < series_.size(); ++j) {
        if (!series_[j].is_zero()) return false;
    }
    return true;
}

void multiply_by_cyclotomic_power(std::vector<BigInt>& series, int t, const BigInt& e) {
    if (t < 1) throw InvalidArgument("cyclotomic power needs t >= 1");
    if (e.is_zero()) return;
    const int n = static_cast<int>(series.size());
    const BigInt magnitude = abs(e);

    if (magnitude <= kRepeatLimit) {
        const int reps = magnitude.convert_to<int>();
        for (int r = 0; r < reps; ++r) {
            if (e > 0) {
                for (int j = n - 1; j >= t; --j) series[j] -= series[j - t];
            } else {
                // Division by 1 - X^t: the truncated geometric series.
                for (int j = t; j < n; ++j) series[j] += series[j - t];
            }
        }
        return;
    }

    const int terms = (n - 1) / t + 1;
    std::vector<BigInt> c(static_cast<std::size_t>(terms));
    c[0] = 1;
    for (int m = 1; m < terms; ++m) {
        if (e > 0) {
            // (-1)^m binom(e, m)
            c[m] = -c[m - 1] * (e - (m - 1)) / m;
        } else {
            // binom(|e| + m - 1, m)
            c[m] = c[m - 1] * (magnitude + (m - 1)) / m;
        }
    }
    multiply_sparse(series, t, c);
}

FactorStep one_step_factor(const LocalFactor& local) {
    const int t = local.start();
    if (local.j_max() < 2 * t) {
        throw InvalidArgument("one_step_factor: J_max = " + std::to_string(local.j_max()) +
                              " < 2t = " + std::to_string(2 * t));
    }
    BigInt exponent = local.eta(t);
    std::vector<BigInt> series = local.series();
    multiply_by_cyclotomic_power(series, t, exponent);
    if (!series[t].is_zero()) throw ConsistencyError("one_step_factor failed to clear X^t");
    return FactorStep{std::move(exponent), LocalFactor(t + 1, std::move(series))};
}

}  // namespace fakemu
