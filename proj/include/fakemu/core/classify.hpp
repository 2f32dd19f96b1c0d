#pragma once

#include <string_view>

#include "fakemu/core/epsilon.hpp"

namespace fakemu {

enum class Kind { TrivialOne, TrivialKthPowers, MobiusType, PowerfreeType, PowerfullType };

struct Classification {
    Kind kind = Kind::TrivialOne;
    int k = 0;  // unused (0) for TrivialOne

    bool trivial() const noexcept {
        return kind == Kind::TrivialOne || kind == Kind::TrivialKthPowers;
    }
    friend bool operator==(const Classification&, const Classification&) = default;
};

std::string_view kind_name(Kind kind) noexcept;

Classification classify(const EpsilonSequence& eps);

}  // namespace fakemu
