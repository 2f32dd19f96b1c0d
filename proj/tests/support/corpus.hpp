#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fakemu/core/classify.hpp"
#include "fakemu/core/epsilon.hpp"
#include "fakemu/core/errors.hpp"
#include "fakemu/factor/factorize.hpp"

namespace fakemu::testing {

struct RandomCorpus {
    std::vector<EpsilonSequence> sequences;
    int trivial_rejected = 0;
    int cap_rejected = 0;  // critical index beyond the default cap
};

inline EpsilonSequence random_sequence(std::mt19937_64& rng, int max_prefix = 8, int max_period = 4) {
    std::uniform_int_distribution<int> plen(0, max_prefix), qlen(1, max_period), entry(-1, 1);
    std::vector<int> prefix(static_cast<std::size_t>(plen(rng))), period(static_cast<std::size_t>(qlen(rng)));
    for (int& e : prefix) e = entry(rng);
    for (int& e : period) e = entry(rng);
    return EpsilonSequence::normalize(std::move(prefix), std::move(period));
}

// Nontrivial sequences with prefix <= 8 and period <= 4, fixed seed.
inline RandomCorpus random_corpus(std::size_t count = 200, std::uint64_t seed = 0x5eed'f00dULL) {
    std::mt19937_64 rng(seed);
    RandomCorpus out;
    while (out.sequences.size() < count) {
        EpsilonSequence eps = random_sequence(rng);
        if (classify(eps).trivial()) {
            ++out.trivial_rejected;
            continue;
        }
        try {
            (void)factorize_by_formula(eps, 0);
        } catch (const BudgetExceeded&) {
            ++out.cap_rejected;
            continue;
        }
        out.sequences.push_back(std::move(eps));
    }
    return out;
}

}  // namespace fakemu::testing
