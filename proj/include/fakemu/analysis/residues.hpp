#pragma once

#include <optional>
#include <vector>

#include "fakemu/analysis/euler_product.hpp"
#include "fakemu/factor/factorize.hpp"

namespace fakemu {

// Residue of D_f(s) x^s / s at s = 1/j, written as P_j(log x) x^{1/j}.
struct MainTermTerm {
    int j = 0;
    int xi = 0;               // detected pole order
    int predicted_order = 0;  // max(a_j, 0)
    std::vector<double> poly;     // P_j coefficients in increasing degree, size xi
    std::vector<double> laurent;  // c_{-1}, c_{-2}, ... of D_f(s)/s at 1/j
    // Laurent data of D_f itself: principal part
    // frak_b / (j^2 (s - 1/j)^2) + frak_a / (j (s - 1/j)); set when xi <= 2.
    std::optional<double> frak_a;
    std::optional<double> frak_b;
    double radius = 0;
    int nodes = 0;
    double tol = 0;  // evaluator tolerance used for this pole
    EvaluatorPlan plan;
};

struct MainTermModel {
    std::vector<MainTermTerm> terms;  // increasing j, only nonzero residues
    double tol = 0;                   // loosest evaluator tolerance used
    double radius_scale = 1;

    const MainTermTerm* term(int j) const;
};

struct MainTermOptions {
    double tol = 1e-12;
    double radius_scale = 1;
    // Retry a pole with tol 1e-10, 1e-8, 1e-6 when the evaluator cannot
    // meet `tol` there.
    bool relax_tol = true;
    int initial_nodes = 512;
    int max_nodes = 1 << 16;
    double agreement = 1e-10;
    // c_{-m} counts as zero below max(zero_threshold, 10 tol) (1 + max|g| r^m),
    // the quadrature noise scale of that coefficient.
    double zero_threshold = 1e-9;
};

// Contour radius used around 1/j before scaling.
double default_contour_radius(int j, int order);

// Laurent coefficients c_{-1..-count} of g around `center` on a circle of
// radius r by the trapezoid rule, doubling nodes until consecutive
// estimates agree. Reports the node count and max |g| on the circle.
template <class G>
std::vector<Complex> contour_laurent(G&& g, Complex center, double radius, int count, int initial_nodes,
                                     int max_nodes, double agreement, int* nodes_used = nullptr,
                                     double* max_modulus = nullptr);

MainTermModel main_term_model(const ZetaFactorization& fz, MainTermOptions options = {});

// G_f(x) = sum_j P_j(log x) x^{1/j}. Requires x >= 2.
double main_term(const MainTermModel& model, double x);

}  // namespace fakemu

#include "fakemu/analysis/residues_impl.hpp"
