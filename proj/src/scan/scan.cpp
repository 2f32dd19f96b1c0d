#include "fakemu/scan/scan.hpp"

#include <algorithm>
#include <cmath>

#include "fakemu/core/errors.hpp"

namespace fakemu {

Normalization normalization(const ZetaFactorization& fz) {
    Normalization n;
    n.denominator = fz.order();
    const BigInt a = fz.exponent(fz.critical_index);
    n.log_power = (a < 0 ? BigInt(-a) : a).convert_to<int>() - 1;
    return n;
}

double normalization_scale(const Normalization& norm, double x) {
    const double lx = x < 3 ? 1.0 : std::log(x);
    return std::pow(x, 1.0 / norm.denominator) * std::pow(lx, norm.log_power);
}

std::pair<double, double> envelopes(const EnvelopeConstants& k, int initial_index, int critical_index, double x) {
    const double lx = std::log(x);
    const double llx = std::max(1.0, std::log(lx));
    const double lo = std::exp(lx / (2.0 * initial_index) + k.C * lx / llx);
    const double hi = std::exp(lx / critical_index - k.c * std::pow(lx, 0.6) / std::pow(llx, 0.2));
    return {lo, hi};
}

std::vector<std::int64_t> geometric_grid(std::int64_t x_max, int points) {
    if (x_max < 2) throw InvalidArgument("grid: x_max must be >= 2");
    if (points < 2) throw InvalidArgument("grid: need at least two points");
    std::vector<std::int64_t> grid;
    const double ratio = std::log(static_cast<double>(x_max) / 2.0);
    for (int k = 0; k < points; ++k) {
        const double x = 2.0 * std::exp(ratio * k / (points - 1));
        grid.push_back(std::clamp<std::int64_t>(std::llround(x), 2, x_max));
    }
    grid.back() = x_max;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

ScanResult scan(const EpsilonSequence& eps, const ZetaFactorization& fz, const MainTermModel& model,
                std::int64_t x_max, const ScanOptions& options) {
    if (x_max < 2) throw InvalidArgument("scan: x_max must be >= 2");
    if (!(fz.source == eps)) throw InvalidArgument("scan: factorization belongs to another sequence");
    ScanResult result;
    result.norm = normalization(fz);
    const std::vector<std::int64_t> grid = geometric_grid(x_max, options.grid_points);
    const SummatorySieve sieve(eps, static_cast<std::uint64_t>(x_max), options.sieve);
    const int initial = eps.initial_index();

    auto make = [&](std::int64_t x, std::int64_t F, double G) {
        ScanRecord r;
        r.x = x;
        r.F = F;
        r.G = G;
        r.E = static_cast<double>(F) - G;
        r.e_norm = r.E / normalization_scale(result.norm, static_cast<double>(x));
        if (options.envelope) {
            const auto [lo, hi] = envelopes(*options.envelope, initial, fz.critical_index, static_cast<double>(x));
            r.env_lo = lo;
            r.env_hi = hi;
        }
        return r;
    };

    std::vector<ScanRecord> grid_records, flip_records;
    std::size_t next = 0;
    int last_sign = 0;
    std::int64_t last_x = 0, last_F = 0;
    double last_G = 0;
    sieve.for_each_segment([&](const SieveSegment& seg) {
        std::int64_t F = seg.summatory_before;
        for (std::size_t i = 0; i < seg.values.size(); ++i) {
            const auto x = static_cast<std::int64_t>(seg.first + i);
            F += seg.values[i];
            if (x < 2) continue;
            const double G = main_term(model, static_cast<double>(x));
            const double E = static_cast<double>(F) - G;
            const int sign = (E > 0) - (E < 0);
            if (sign != 0) {
                if (last_sign != 0 && sign != last_sign) {
                    ++result.sign_change_count;
                    if (flip_records.size() + 2 <= options.max_refined) {
                        flip_records.push_back(make(last_x, last_F, last_G));
                        flip_records.push_back(make(x, F, G));
                    } else {
                        result.truncated = true;
                    }
                }
                last_sign = sign;
                last_x = x;
                last_F = F;
                last_G = G;
            }
            if (next < grid.size() && grid[next] == x) {
                grid_records.push_back(make(x, F, G));
                ++next;
            }
        }
    });

    result.records = std::move(grid_records);
    result.records.insert(result.records.end(), flip_records.begin(), flip_records.end());
    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const ScanRecord& a, const ScanRecord& b) { return a.x < b.x; });
    result.records.erase(std::unique(result.records.begin(), result.records.end(),
                                     [](const ScanRecord& a, const ScanRecord& b) { return a.x == b.x; }),
                         result.records.end());
    return result;
}

std::vector<std::pair<std::int64_t, std::int64_t>> sign_changes(const std::vector<ScanRecord>& records) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    const ScanRecord* last = nullptr;
    for (const auto& r : records) {
        if (r.E == 0) continue;
        if (last && (last->E > 0) != (r.E > 0)) out.emplace_back(last->x, r.x);
        last = &r;
    }
    return out;
}

Extrema extrema(const std::vector<ScanRecord>& records) {
    if (records.empty()) throw InvalidArgument("extrema: no records");
    Extrema e{records.front().e_norm, records.front().e_norm, records.front().x, records.front().x};
    for (const auto& r : records) {
        if (r.e_norm > e.sup_norm) {
            e.sup_norm = r.e_norm;
            e.arg_sup = r.x;
        }
        if (r.e_norm < e.inf_norm) {
            e.inf_norm = r.e_norm;
            e.arg_inf = r.x;
        }
    }
    return e;
}

}  // namespace fakemu
