#include "fakemu/core/classify.hpp"

namespace fakemu {

std::string_view kind_name(Kind kind) noexcept {
    switch (kind) {
        case Kind::TrivialOne: return "TrivialOne";
        case Kind::TrivialKthPowers: return "TrivialKthPowers";
        case Kind::MobiusType: return "MobiusType";
        case Kind::PowerfreeType: return "PowerfreeType";
        case Kind::PowerfullType: return "PowerfullType";
    }
    return "Unknown";
}

Classification classify(const EpsilonSequence& eps) {
    const int k = eps.initial_index();
    if (k == 0) return {Kind::TrivialOne, 0};

    // The k-th power indicator normalizes to an empty prefix and the period
    // 0,...,0,1 of length k, so comparing encodings decides equality.
    if (eps.at(k) == 1 && eps.prefix().empty() &&
        eps.period().size() == static_cast<std::size_t>(k)) {
        bool indicator = true;
        for (int j = 1; j <= k && indicator; ++j) indicator = eps.at(j) == (j == k ? 1 : 0);
        if (indicator) return {Kind::TrivialKthPowers, k};
    }

    if (eps.at(k) == -1) return {Kind::MobiusType, k};
    if (k == 1) {
        // Some eps_j != 1 exists, otherwise the sequence is the k = 1 indicator.
        const auto limit = static_cast<int>(eps.window()) + 1;
        for (int j = 2; j <= limit; ++j) {
            if (eps.at(j) != 1) return {Kind::PowerfreeType, j};
        }
    }
    return {Kind::PowerfullType, k};
}

}  // namespace fakemu
