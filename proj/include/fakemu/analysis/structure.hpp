#pragma once

#include <vector>

#include "fakemu/core/classify.hpp"
#include "fakemu/core/epsilon.hpp"

namespace fakemu {

struct PredictedTerm {
    int j;
    int xi;
    friend bool operator==(const PredictedTerm&, const PredictedTerm&) = default;
};

// Which 1/j carry a pole of D_f contributing to G_f, with pole orders,
// from the sequence alone. Mobius-type: k+1 <= j <= 2k with eps_j = 1.
// Powerfree-type: j = 1, the rises eps_j > eps_{j-1} on (k, 2k), and
// j = 2k with order eps_{2k} - eps_{2k-1} + eps_k when positive.
// Powerfull-type: the principal indices and the j in (l, 2l] with a_j > 0.
struct PredictedStructure {
    Classification type;
    int critical_index = 0;
    std::vector<PredictedTerm> terms;  // increasing j
};

// Throws InvalidArgument for trivial sequences.
PredictedStructure predicted_main_term_structure(const EpsilonSequence& eps, int cap = 64);

// The powerfull-type rule (principal indices plus positive a_j on (l, 2l])
// applied to any non-Mobius sequence; agrees with the powerfree rule.
PredictedStructure predicted_structure_general(const EpsilonSequence& eps, int cap = 64);

}  // namespace fakemu
