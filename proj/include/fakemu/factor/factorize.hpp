#pragma once

#include <span>
#include <vector>

#include "fakemu/core/classify.hpp"
#include "fakemu/core/epsilon.hpp"
#include "fakemu/factor/bigint.hpp"
#include "fakemu/factor/local_factor.hpp"

namespace fakemu {

// |eta_j| <= (A j)^B for every residual coefficient.
struct TailBound {
    double A = 0;
    double B = 0;
};

// D_f(s) = prod_{j<=2l} zeta(js)^{a_j} * U(s), with U's local factor
// 1 + sum_{j>2l} eta_j X^j stored up to J_max.
struct ZetaFactorization {
    EpsilonSequence source;
    Classification type;
    int critical_index = 0;
    std::vector<int> principal_indices;
    std::vector<BigInt> exponents;  // index j for 0 <= j <= 2l; entry 0 unused
    LocalFactor residual;
    TailBound tail_bound;

    int j_max() const noexcept { return residual.j_max(); }
    int order() const noexcept { return 2 * critical_index; }
    // a_j, zero outside 1..2l.
    BigInt exponent(int j) const;
};

struct FactorizeOptions {
    int j_max = 0;  // 0 selects max(2l + 16, 64); values below 2l + 8 are raised
    int critical_cap = 64;
};

// The pieces both computation routes produce.
struct FactorizationCore {
    int critical_index = 0;
    std::vector<int> principal_indices;
    std::vector<BigInt> exponents;
    std::vector<BigInt> residual;  // full local series 0..J_max

    friend bool operator==(const FactorizationCore&, const FactorizationCore&) = default;
};

// Route (i): repeated one_step_factor, reading l off the first negative
// exponent.
FactorizationCore factorize_by_elimination(const EpsilonSequence& eps, int j_max, int cap = 64);

// Route (ii): closed forms (Mobius-type directly, otherwise Algorithm 1
// and the signed subset sums), residual by direct series product.
FactorizationCore factorize_by_formula(const EpsilonSequence& eps, int j_max, int cap = 64);

// Runs both routes and insists they agree. Throws InvalidArgument for
// trivial input, BudgetExceeded past the cap, ConsistencyError on
// disagreement.
ZetaFactorization factorize(const EpsilonSequence& eps, FactorizeOptions options = {});

// Local series of U to an arbitrary order, recomputed from the source
// sequence and the exponents.
std::vector<BigInt> residual_series(const ZetaFactorization& fz, int order);

// Continuing the elimination past 2l: U = prod_{2l<j<=order} zeta(js)^{b_j} * V.
struct ZetaExtension {
    std::vector<BigInt> exponents;  // index j; zero for j <= 2l
    std::vector<BigInt> remainder;  // local series of V up to `work`
};
ZetaExtension extend_factorization(const ZetaFactorization& fz, int order, int work);

// eps series as N(X) / (1 - X^q) with q the period length.
struct EpsilonGeneratingFunction {
    std::vector<BigInt> numerator;
    int q = 1;
};
EpsilonGeneratingFunction generating_function(const EpsilonSequence& eps);

// Exact test of D_f(s) == prod_j zeta(js)^{exponents[j]} as an identity
// of rational functions in X. Returns false when the polynomial degrees
// involved exceed `degree_cap`.
bool factors_exactly(const EpsilonSequence& eps, std::span<const BigInt> exponents, int degree_cap = 20000);

// Exact test of U == 1 as an identity of rational functions. Returns false
// when the polynomial degrees involved exceed `degree_cap`.
bool residual_is_identically_one(const ZetaFactorization& fz, int degree_cap = 20000);

}  // namespace fakemu
