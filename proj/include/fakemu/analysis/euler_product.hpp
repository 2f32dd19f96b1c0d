#pragma once

#include <vector>

#include "fakemu/analysis/zeta.hpp"
#include "fakemu/factor/factorize.hpp"

namespace fakemu {

// How U(s) is assembled.
// Exact: U = prod_{2l<j<=J} zeta(js)^{b_j} identically.
// Otherwise: log U = sum_{p<=P} log U_p(p^{-s}) + sum_{2l<i<=I} w_i P_{>P}(is),
// where log U_p(X) = sum_i w_i X^i and P_{>P}(w) = sum_{p>P} p^{-w} is
// obtained from log zeta by Moebius inversion minus the primes up to P.
struct EvaluatorPlan {
    bool exact = false;
    int extension_order = 0;  // J when exact, I otherwise
    long prime_bound = 0;     // P, zero when exact
    int zeta_terms = 0;       // largest m with log zeta(ms) in use
    double sigma_min = 0;
    double error_bound = 0;  // bound on the log U error for Re(s) >= sigma_min
};

// Evaluates U and D_f anywhere in Re(s) >= sigma_min, where sigma_min must
// exceed 1/(2l+1). The plan is fixed at construction so every evaluation
// uses the same truncation. Throws NumericFailure when `tol` cannot be met.
class DirichletSeriesEvaluator {
public:
    DirichletSeriesEvaluator(const ZetaFactorization& fz, double sigma_min, double tol);

    ComplexLD log_U(Complex s) const;
    // log D_f up to a multiple of 2 pi i.
    ComplexLD log_D(Complex s) const;
    Complex U(Complex s) const;
    Complex D(Complex s) const;

    const EvaluatorPlan& plan() const noexcept { return plan_; }

private:
    void check_point(Complex s) const;
    // log zeta(ms) for 1 <= m <= count (index 0 unused).
    std::vector<ComplexLD> log_zeta_table(ComplexLD s, int count) const;
    ComplexLD log_U_from(ComplexLD s, const std::vector<ComplexLD>& log_zeta) const;

    int order_ = 0;
    std::vector<long double> a_;  // index j <= 2l
    std::vector<long double> b_;  // exact case, index j <= J
    std::vector<long double> numerator_;
    int q_ = 1;
    std::vector<long double> w_;      // index i <= I
    std::vector<int> moebius_terms_;  // K_i, index i <= I
    std::vector<int> moebius_;
    std::vector<long> primes_;
    EvaluatorPlan plan_;
};

// U(s) within `tol` in log-modulus. Requires Re(s) > 1/(2l+1) + margin.
Complex evaluate_U(const ZetaFactorization& fz, Complex s, double tol = 1e-12, double margin = 0.02);

// prod_{j<=2l} zeta(js)^{a_j} U(s). Throws DomainError at a pole.
Complex evaluate_Df(const ZetaFactorization& fz, Complex s, double tol = 1e-12, double margin = 0.02);

}  // namespace fakemu
