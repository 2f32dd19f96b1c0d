#include "fakemu/analysis/structure.hpp"

#include <algorithm>

#include "fakemu/core/errors.hpp"
#include "fakemu/factor/algorithm.hpp"

namespace fakemu {

PredictedStructure predicted_structure_general(const EpsilonSequence& eps, int cap) {
    const AlgorithmResult alg = run_algorithm1(eps, cap);
    const int ell = alg.critical_index;
    PredictedStructure out{classify(eps), ell, {}};
    for (int c : alg.principal_indices) out.terms.push_back({c, 1});
    const std::vector<BigInt> sums = signed_subset_sums(eps, alg.principal_indices, 2 * ell);
    for (int j = ell + 1; j <= 2 * ell; ++j) {
        BigInt a = sums[j];
        if (j == 2 * ell) {
            const BigInt d = BigInt(alg.eps_critical) - alg.n_critical;
            a -= (d * d + d) / 2;
        }
        if (a > 0) out.terms.push_back({j, a.convert_to<int>()});
    }
    return out;
}

PredictedStructure predicted_main_term_structure(const EpsilonSequence& eps, int cap) {
    const Classification type = classify(eps);
    if (type.trivial()) throw InvalidArgument("structure: trivial sequence");
    const int k = type.k;
    PredictedStructure out{type, k, {}};
    switch (type.kind) {
        case Kind::MobiusType:
            for (int j = k + 1; j <= 2 * k; ++j)
                if (eps.at(j) == 1) out.terms.push_back({j, 1});
            return out;
        case Kind::PowerfreeType: {
            out.terms.push_back({1, 1});
            for (int j = k + 1; j <= 2 * k - 1; ++j) {
                const int rise = eps.at(j) - eps.at(j - 1);
                if (rise > 0) out.terms.push_back({j, rise});
            }
            const int top = eps.at(2 * k) - eps.at(2 * k - 1) + eps.at(k);
            if (top > 0) out.terms.push_back({2 * k, top});
            return out;
        }
        case Kind::PowerfullType:
            return predicted_structure_general(eps, cap);
        default:
            throw InvalidArgument("structure: trivial sequence");
    }
}

}  // namespace fakemu
