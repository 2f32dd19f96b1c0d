#include "fakemu/analysis/residues.hpp"

#include <array>
#include <cmath>

#include "fakemu/core/errors.hpp"

namespace fakemu {

const MainTermTerm* MainTermModel::term(int j) const {
    for (const auto& t : terms)
        if (t.j == j) return &t;
    return nullptr;
}

double default_contour_radius(int j, int order) {
    if (j < 1 || j > order) throw InvalidArgument("contour radius: j outside 1..2l");
    const double c = 1.0 / j;
    double gap = c - 1.0 / (j + 1);
    if (j > 1) gap = std::min(gap, 1.0 / (j - 1) - c);
    gap = std::min(gap, c - 1.0 / (order + 1));
    return 0.25 * gap;
}

namespace {

MainTermTerm residue_term(const ZetaFactorization& fz, int j, const MainTermOptions& options, double tol) {
    const int order = fz.order();
    const double base_radius = default_contour_radius(j, order);
    // The plan depends only on the default circle, so rescaling the radius
    // keeps the same truncation.
    const DirichletSeriesEvaluator eval(fz, (1.0 / j - base_radius) * (1 - 1e-12), tol);
    MainTermTerm term;
    term.j = j;
    term.predicted_order = fz.exponent(j).convert_to<int>();
    term.radius = base_radius * options.radius_scale;
    term.tol = tol;
    term.plan = eval.plan();
    double peak = 0;
    const auto c = contour_laurent([&](Complex s) { return eval.D(s) / s; }, Complex(1.0 / j, 0.0), term.radius,
                                   term.predicted_order + 1, options.initial_nodes, options.max_nodes,
                                   options.agreement, &term.nodes, &peak);
    const double floor = std::max(options.zero_threshold, 10 * tol);
    for (const auto& v : c) term.laurent.push_back(v.real());
    for (int m = static_cast<int>(c.size()); m >= 1; --m) {
        if (std::abs(c[m - 1]) >= floor * (1 + peak * std::pow(term.radius, m))) {
            term.xi = m;
            break;
        }
    }
    double factorial = 1;
    for (int i = 0; i < term.xi; ++i) {
        if (i > 0) factorial *= i;
        term.poly.push_back(term.laurent[i] / factorial);
    }
    if (term.xi >= 1 && term.xi <= 2) {
        const double c1 = term.laurent[0];
        const double c2 = term.xi == 2 ? term.laurent[1] : 0.0;
        term.frak_a = c1 + j * c2;
        term.frak_b = j * c2;
    }
    return term;
}

}  // namespace

MainTermModel main_term_model(const ZetaFactorization& fz, MainTermOptions options) {
    if (!(options.radius_scale > 0 && options.radius_scale <= 1))
        throw InvalidArgument("main_term_model: radius_scale must lie in (0, 1]");
    std::vector<double> ladder{options.tol};
    if (options.relax_tol) {
        for (double t : {1e-10, 1e-8, 1e-6})
            if (t > options.tol) ladder.push_back(t);
    }
    MainTermModel model;
    model.radius_scale = options.radius_scale;
    for (int j = 1; j <= fz.order(); ++j) {
        if (fz.exponent(j) < 1) continue;
        for (std::size_t i = 0; i < ladder.size(); ++i) {
            try {
                MainTermTerm term = residue_term(fz, j, options, ladder[i]);
                model.tol = std::max(model.tol, ladder[i]);
                if (term.xi > 0) model.terms.push_back(std::move(term));
                break;
            } catch (const NumericFailure&) {
                if (i + 1 == ladder.size()) throw;
            }
        }
    }
    return model;
}

double main_term(const MainTermModel& model, double x) {
    if (!(x >= 2)) throw InvalidArgument("main_term: x must be >= 2");
    const double lx = std::log(x);
    double total = 0;
    for (const auto& t : model.terms) {
        double p = 0;
        for (std::size_t i = t.poly.size(); i-- > 0;) p = p * lx + t.poly[i];
        total += p * std::exp(lx / t.j);
    }
    return total;
}

}  // namespace fakemu
