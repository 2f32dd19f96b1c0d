#include "fakemu/core/epsilon.hpp"

#include <algorithm>
#include <sstream>

#include "fakemu/core/errors.hpp"

namespace fakemu {
namespace {

void check_entries(const std::vector<int>& v, const char* what) {
    for (int e : v) {
        if (e < -1 || e > 1) {
            throw InvalidArgument(std::string(what) + " entry " + std::to_string(e) +
                                  " outside {-1,0,1}");
        }
    }
}

std::size_t primitive_length(const std::vector<int>& period) {
    const std::size_t q = period.size();
    for (std::size_t d = 1; d < q; ++d) {
        if (q % d != 0) continue;
        bool repeats = true;
        for (std::size_t i = d; i < q && repeats; ++i) repeats = period[i] == period[i - d];
        if (repeats) return d;
    }
    return q;
}

void write_list(std::ostream& os, const std::vector<int>& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
}

}  // namespace

EpsilonSequence EpsilonSequence::normalize(std::vector<int> prefix, std::vector<int> period) {
    if (period.empty()) throw InvalidArgument("period must be nonempty");
    check_entries(prefix, "prefix");
    check_entries(period, "period");

    period.resize(primitive_length(period));
    // A trailing prefix entry equal to the last period entry is one more
    // copy of the cycle, shifted by one position.
    while (!prefix.empty() && prefix.back() == period.back()) {
        prefix.pop_back();
        std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
    }
    return EpsilonSequence(std::move(prefix), std::move(period));
}

int EpsilonSequence::at(std::int64_t j) const noexcept {
    if (j < 0) return 0;
    if (j == 0) return 1;
    const auto len = static_cast<std::int64_t>(prefix_.size());
    if (j <= len) return prefix_[static_cast<std::size_t>(j - 1)];
    const auto q = static_cast<std::int64_t>(period_.size());
    return period_[static_cast<std::size_t>((j - len - 1) % q)];
}

int EpsilonSequence::initial_index() const noexcept {
    const auto limit = static_cast<std::int64_t>(window());
    for (std::int64_t j = 1; j <= limit; ++j) {
        if (at(j) != 0) return static_cast<int>(j);
    }
    return 0;
}

std::string EpsilonSequence::to_string() const {
    std::ostringstream os;
    os << "prefix=";
    write_list(os, prefix_);
    os << ";period=";
    write_list(os, period_);
    return os.str();
}

int evaluate(const EpsilonSequence& eps, std::uint64_t n) {
    if (n == 0) throw InvalidArgument("evaluate: n must be positive");
    int value = 1;
    auto strip = [&](std::uint64_t p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) value *= eps.at(e);
    };
    strip(2);
    for (std::uint64_t p = 3; p <= n / p && value != 0; p += 2) strip(p);
    if (n > 1 && value != 0) value *= eps.at(1);
    return value;
}

}  // namespace fakemu
