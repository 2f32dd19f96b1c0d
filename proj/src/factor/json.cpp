#include "fakemu/factor/json.hpp"

namespace fakemu {

nlohmann::ordered_json bigint_to_json(const BigInt& v) {
    if (fits_int64(v)) return v.convert_to<std::int64_t>();
    return v.str();
}

nlohmann::ordered_json to_json(const Classification& c) {
    nlohmann::ordered_json out = {{"kind", kind_name(c.kind)}};
    if (c.kind != Kind::TrivialOne) out["k"] = c.k;
    return out;
}

nlohmann::ordered_json to_json(const ZetaFactorization& fz) {
    nlohmann::ordered_json exponents = nlohmann::ordered_json::array();
    for (int j = 1; j <= fz.order(); ++j) {
        if (!fz.exponents[j].is_zero()) exponents.push_back({{"j", j}, {"a", bigint_to_json(fz.exponents[j])}});
    }
    nlohmann::ordered_json residual = nlohmann::ordered_json::array();
    for (int j = fz.residual.start(); j <= fz.j_max(); ++j) {
        const BigInt& eta = fz.residual.eta(j);
        if (!eta.is_zero()) residual.push_back({{"j", j}, {"eta", bigint_to_json(eta)}});
    }
    return {{"critical_index", fz.critical_index},
            {"principal_indices", fz.principal_indices},
            {"exponents", std::move(exponents)},
            {"residual", std::move(residual)},
            {"tail_bound", {{"A", fz.tail_bound.A}, {"B", fz.tail_bound.B}}},
            {"j_max", fz.j_max()}};
}

}  // namespace fakemu
