#pragma once

#include <json.hpp>

#include "fakemu/core/classify.hpp"
#include "fakemu/factor/bigint.hpp"
#include "fakemu/factor/factorize.hpp"

namespace fakemu {

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
nlohmann::ordered_json bigint_to_json(const BigInt& v);

nlohmann::ordered_json to_json(const Classification& c);

// {"critical_index", "principal_indices", "exponents", "residual",
//  "tail_bound", "j_max"}; zero exponents and zero residual entries omitted.
nlohmann::ordered_json to_json(const ZetaFactorization& fz);

}  // namespace fakemu
