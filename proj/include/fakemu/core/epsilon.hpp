#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace fakemu {

// The sequence (eps_j)_{j>=1} defining a fake mu via f(p^j) = eps_j.
// Stored as a finite prefix followed by a period repeated forever.
// Instances are always normalized, so equality of objects is equality
// of the infinite sequences.
class EpsilonSequence {
public:
    // Validates entries and reduces to the canonical encoding.
    // Throws InvalidArgument for entries outside {-1,0,1} or an empty period.
    static EpsilonSequence normalize(std::vector<int> prefix, std::vector<int> period);

    // eps_j with the conventions eps_0 = 1 and eps_j = 0 for j < 0.
    int at(std::int64_t j) const noexcept;

    const std::vector<int>& prefix() const noexcept { return prefix_; }
    const std::vector<int>& period() const noexcept { return period_; }

    // prefix length + period length; equality of two sequences is decided
    // by comparing them on any window at least this long past the prefixes.
    std::size_t window() const noexcept { return prefix_.size() + period_.size(); }

    // First j >= 1 with eps_j != 0, or 0 if the sequence vanishes.
    int initial_index() const noexcept;

    // Inline text form `prefix=[..];period=[..]`.
    std::string to_string() const;

    friend bool operator==(const EpsilonSequence&, const EpsilonSequence&) = default;

private:
    EpsilonSequence(std::vector<int> prefix, std::vector<int> period)
        : prefix_(std::move(prefix)), period_(std::move(period)) {}

    std::vector<int> prefix_;
    std::vector<int> period_;
};

// f(n) for the fake mu attached to eps, by trial division. Throws
// InvalidArgument for n = 0.
int evaluate(const EpsilonSequence& eps, std::uint64_t n);

}  // namespace fakemu
