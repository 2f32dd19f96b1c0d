#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fakemu/core/epsilon.hpp"
#include "fakemu/factor/bigint.hpp"

namespace fakemu {

enum class StepAction { None, NewPrincipal, Stop };

struct AlgorithmStep {
    int j;
    std::int64_t representations;  // n_j from the principal indices found so far
    StepAction action;
};

// Parameters of level m: the smallest r with eps_r != 0 and no
// representation, s with eps_s != 1 and exactly one, t with at least two.
// Searched up to 2*l; nullopt when none exists there.
struct LevelTriple {
    int level;
    std::optional<int> r, s, t;
};

struct AlgorithmTrace {
    std::vector<AlgorithmStep> steps;
    // theta[m][j] for 0 <= m <= M and 0 <= j <= 2l: the local coefficients
    // after dividing out zeta(c_1 s) ... zeta(c_m s).
    std::vector<std::vector<BigInt>> theta;
    std::vector<LevelTriple> triples;
};

struct AlgorithmResult {
    int critical_index;
    std::vector<int> principal_indices;
    std::int64_t n_critical;
    int eps_critical;
    AlgorithmTrace trace;
};

// Number of ways to write each 0 <= j <= upto as a nonnegative integer
// combination of `parts` (order irrelevant). Index 0 holds 1.
std::vector<std::int64_t> representation_counts(std::span<const int> parts, int upto);

// Critical and principal indices for powerfree or powerfull type.
// Throws InvalidArgument for Mobius-type or trivial input and
// BudgetExceeded when the critical index passes `cap`.
AlgorithmResult run_algorithm1(const EpsilonSequence& eps, int cap = 64);

// sum over subsets I of `parts` of (-1)^{|I|} eps_{j - sum I}, for
// 0 <= j <= upto, via the product of (1 - X^c) against the eps series.
std::vector<BigInt> signed_subset_sums(const EpsilonSequence& eps, std::span<const int> parts, int upto);

}  // namespace fakemu
