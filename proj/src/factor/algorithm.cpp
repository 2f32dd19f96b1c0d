#include "fakemu/factor/algorithm.hpp"

#include "fakemu/core/classify.hpp"
#include "fakemu/core/errors.hpp"

namespace fakemu {

std::vector<std::int64_t> representation_counts(std::span<const int> parts, int upto) {
    std::vector<std::int64_t> n(static_cast<std::size_t>(upto) + 1, 0);
    n[0] = 1;
    for (int c : parts) {
        if (c < 1) throw InvalidArgument("representation parts must be positive");
        for (int j = c; j <= upto; ++j) n[j] += n[j - c];
    }
    return n;
}

std::vector<BigInt> signed_subset_sums(const EpsilonSequence& eps, std::span<const int> parts, int upto) {
    std::vector<BigInt> theta(static_cast<std::size_t>(upto) + 1);
    for (int j = 0; j <= upto; ++j) theta[j] = eps.at(j);
    for (int c : parts) {
        for (int j = upto; j >= c; --j) theta[j] -= theta[j - c];
    }
    return theta;
}

AlgorithmResult run_algorithm1(const EpsilonSequence& eps, int cap) {
    const Classification cls = classify(eps);
    if (cls.kind != Kind::PowerfreeType && cls.kind != Kind::PowerfullType) {
        throw InvalidArgument("Algorithm 1 requires powerfree or powerfull type, got " +
                              std::string(kind_name(cls.kind)));
    }

    AlgorithmResult out{};
    std::vector<int> c{eps.initial_index()};
    // Counts grow incrementally as principal indices are appended.
    std::vector<std::int64_t> reps = representation_counts(c, cap);

    int ell = 0;
    for (int j = c.front() + 1; ell == 0; ++j) {
        if (j > cap) {
            throw BudgetExceeded("critical index exceeds cap " + std::to_string(cap));
        }
        const std::int64_t nj = reps[j];
        const int ej = eps.at(j);
        StepAction action = StepAction::None;
        if (nj == 0 && ej == 1) {
            c.push_back(j);
            for (int i = j; i <= cap; ++i) reps[i] += reps[i - j];
            action = StepAction::NewPrincipal;
        }
        if (nj > ej) {
            ell = j;
            out.n_critical = nj;
            out.eps_critical = ej;
            action = StepAction::Stop;
        }
        out.trace.steps.push_back({j, nj, action});
    }
    out.critical_index = ell;
    out.principal_indices = c;

    const int top = 2 * ell;
    auto& theta = out.trace.theta;
    theta.push_back(signed_subset_sums(eps, {}, top));
    for (std::size_t m = 0; m < c.size(); ++m) {
        std::vector<BigInt> next = theta.back();
        for (int j = top; j >= c[m]; --j) next[j] -= theta.back()[j - c[m]];
        theta.push_back(std::move(next));
    }

    for (std::size_t m = 1; m <= c.size(); ++m) {
        const auto counts = representation_counts(std::span(c).first(m), top);
        LevelTriple tr{static_cast<int>(m), {}, {}, {}};
        for (int j = 1; j <= top; ++j) {
            const int ej = eps.at(j);
            if (!tr.r && ej != 0 && counts[j] == 0) tr.r = j;
            if (!tr.s && ej != 1 && counts[j] == 1) tr.s = j;
            if (!tr.t && counts[j] >= 2) tr.t = j;
        }
        out.trace.triples.push_back(tr);
    }
    return out;
}

}  // namespace fakemu
