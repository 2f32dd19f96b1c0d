#include "fakemu/core/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <array>
#include <future>
#include <numeric>
#include <thread>

#include "fakemu/core/errors.hpp"

namespace fakemu {
namespace {

// n < 2^32, so no exponent exceeds 31.
constexpr int kMaxExponent = 32;

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

std::uint32_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return static_cast<std::uint32_t>(r);
}

struct Workspace {
    std::vector<std::int8_t> values;
    std::vector<std::uint32_t> smooth;  // product of prime powers found so far
    std::vector<std::uint8_t> exponent;
};

class SegmentFiller {
public:
    SegmentFiller(const EpsilonSequence& eps, std::uint64_t n_max)
        : primes_(primes_up_to(isqrt(n_max))) {
        for (int e = 0; e < kMaxExponent; ++e) table_[e] = static_cast<std::int8_t>(eps.at(e));
    }

    // Fills f(lo), ..., f(lo + len - 1) into ws.values.
    void fill(std::uint64_t lo, std::size_t len, Workspace& ws) const {
        ws.values.assign(len, 1);
        ws.smooth.assign(len, 1);
        ws.exponent.assign(len, 0);
        const std::uint64_t last = lo + len - 1;

        for (std::uint32_t p : primes_) {
            const std::uint64_t pp = std::uint64_t{p} * p;
            if (pp > last) break;
            const std::size_t start = static_cast<std::size_t>((lo + p - 1) / p * p - lo);
            for (std::size_t i = start; i < len; i += p) ws.exponent[i] = 1;
            for (std::uint64_t pk = pp; pk <= last; pk *= p) {
                const std::size_t s = static_cast<std::size_t>((lo + pk - 1) / pk * pk - lo);
                for (std::size_t i = s; i < len; i += pk) ++ws.exponent[i];
            }
            for (std::size_t i = start; i < len; i += p) {
                const int e = ws.exponent[i];
                std::uint32_t pe = p;
                for (int t = 1; t < e; ++t) pe *= p;
                ws.values[i] = static_cast<std::int8_t>(ws.values[i] * table_[e]);
                ws.smooth[i] *= pe;
                ws.exponent[i] = 0;
            }
        }
        // Whatever remains of n is a single prime above sqrt(n).
        for (std::size_t i = 0; i < len; ++i) {
            if (ws.smooth[i] != lo + i) ws.values[i] = static_cast<std::int8_t>(ws.values[i] * table_[1]);
        }
    }

private:
    std::vector<std::uint32_t> primes_;
    std::array<std::int8_t, kMaxExponent> table_{};
};

}  // namespace

SummatorySieve::SummatorySieve(EpsilonSequence eps, std::uint64_t n_max, SieveOptions options)
    : eps_(std::move(eps)), n_max_(n_max), options_(options) {
    if (n_max_ == 0) throw InvalidArgument("sieve: N must be positive");
    const std::uint64_t ceiling = std::min<std::uint64_t>(options_.max_n, 0xFFFFFFFFULL);
    if (n_max_ > ceiling) {
        throw BudgetExceeded("sieve: N = " + std::to_string(n_max_) + " exceeds budget " +
                             std::to_string(ceiling));
    }
    if (options_.segment_size == 0) throw InvalidArgument("sieve: segment size must be positive");
    if (options_.threads == 0) options_.threads = std::max(1u, std::thread::hardware_concurrency());
}

std::int64_t SummatorySieve::for_each_segment(
    const std::function<void(const SieveSegment&)>& visit) const {
    const SegmentFiller filler(eps_, n_max_);
    const std::uint64_t seg = options_.segment_size;
    const std::uint64_t segments = (n_max_ + seg - 1) / seg;
    const unsigned batch = static_cast<unsigned>(
        std::min<std::uint64_t>(options_.threads, segments));
    std::vector<Workspace> ws(batch);

    std::int64_t total = 0;
    for (std::uint64_t first_seg = 0; first_seg < segments; first_seg += batch) {
        const auto count = static_cast<unsigned>(std::min<std::uint64_t>(batch, segments - first_seg));
        auto bounds = [&](unsigned b) {
            const std::uint64_t lo = 1 + (first_seg + b) * seg;
            const auto len = static_cast<std::size_t>(std::min<std::uint64_t>(seg, n_max_ - lo + 1));
            return std::pair{lo, len};
        };
        if (count == 1) {
            auto [lo, len] = bounds(0);
            filler.fill(lo, len, ws[0]);
        } else {
            std::vector<std::future<void>> jobs;
            for (unsigned b = 0; b < count; ++b) {
                jobs.push_back(std::async(std::launch::async, [&, b] {
                    auto [lo, len] = bounds(b);
                    filler.fill(lo, len, ws[b]);
                }));
            }
            for (auto& j : jobs) j.get();
        }
        for (unsigned b = 0; b < count; ++b) {
            auto [lo, len] = bounds(b);
            visit(SieveSegment{lo, std::span<const std::int8_t>(ws[b].values.data(), len), total});
            for (std::int8_t v : ws[b].values) total += v;
        }
    }
    return total;
}

std::vector<std::int64_t> SummatorySieve::summatory_at(std::span<const std::uint64_t> points) const {
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return points[a] < points[b]; });
    for (std::uint64_t x : points) {
        if (x == 0 || x > n_max_) throw InvalidArgument("sieve: sample point out of range");
    }

    std::vector<std::int64_t> out(points.size());
    std::size_t next = 0;
    for_each_segment([&](const SieveSegment& s) {
        const std::uint64_t end = s.first + s.values.size();
        if (next == order.size() || points[order[next]] >= end) return;
        std::int64_t running = s.summatory_before;
        for (std::size_t i = 0; i < s.values.size() && next < order.size(); ++i) {
            running += s.values[i];
            while (next < order.size() && points[order[next]] == s.first + i) out[order[next++]] = running;
        }
    });
    return out;
}

std::vector<std::int8_t> sieve_values(const EpsilonSequence& eps, std::uint64_t n_max) {
    std::vector<std::int8_t> out;
    out.reserve(n_max);
    SummatorySieve(eps, n_max).for_each_segment([&](const SieveSegment& s) {
        out.insert(out.end(), s.values.begin(), s.values.end());
    });
    return out;
}

std::int64_t summatory(const EpsilonSequence& eps, std::uint64_t n_max, SieveOptions options) {
    return SummatorySieve(eps, n_max, options).for_each_segment([](const SieveSegment&) {});
}

}  // namespace fakemu
