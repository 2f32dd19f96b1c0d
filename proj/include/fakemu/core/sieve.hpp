#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "fakemu/core/epsilon.hpp"

namespace fakemu {

struct SieveOptions {
    std::size_t segment_size = std::size_t{1} << 22;
    // Hard ceiling on N; the remainder arrays are 32-bit.
    std::uint64_t max_n = 4'000'000'000ULL;
    // Number of segments filled concurrently. 0 means hardware concurrency.
    unsigned threads = 1;
};

// One contiguous block of values f(first), ..., f(first + values.size() - 1).
// `summatory_before` is F(first - 1).
struct SieveSegment {
    std::uint64_t first;
    std::span<const std::int8_t> values;
    std::int64_t summatory_before;
};

// Segmented sieve for f over [1, N]. Segments are delivered in increasing
// order even when filled in parallel.
class SummatorySieve {
public:
    SummatorySieve(EpsilonSequence eps, std::uint64_t n_max, SieveOptions options = {});

    std::uint64_t n_max() const noexcept { return n_max_; }

    // Streams every segment; returns F(N).
    std::int64_t for_each_segment(const std::function<void(const SieveSegment&)>& visit) const;

    // F(x) for each x in `points` (any order, each 1 <= x <= N).
    std::vector<std::int64_t> summatory_at(std::span<const std::uint64_t> points) const;

private:
    EpsilonSequence eps_;
    std::uint64_t n_max_;
    SieveOptions options_;
};

// f(1..N) as a dense array, index i holding f(i + 1). Convenience for tests
// and oracles at moderate N.
std::vector<std::int8_t> sieve_values(const EpsilonSequence& eps, std::uint64_t n_max);

// F(N) directly.
std::int64_t summatory(const EpsilonSequence& eps, std::uint64_t n_max, SieveOptions options = {});

}  // namespace fakemu
