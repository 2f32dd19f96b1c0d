#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fakemu/core/errors.hpp"

namespace fakemu {

template <class G>
std::vector<Complex> contour_laurent(G&& g, Complex center, double radius, int count, int initial_nodes,
                                     int max_nodes, double agreement, int* nodes_used, double* max_modulus) {
    if (count < 1 || initial_nodes < 4 || radius <= 0) throw InvalidArgument("contour_laurent: bad arguments");
    // values[n] = g(center + r e^{2 pi i n / N}) on the finest grid so far.
    std::vector<Complex> values;
    auto node = [&](int n, int total) {
        return std::polar(radius, 2 * std::numbers::pi * n / total);
    };
    auto estimate = [&](int total) {
        std::vector<Complex> c(static_cast<std::size_t>(count), 0.0);
        for (int n = 0; n < total; ++n) {
            const Complex w = node(n, total);
            Complex wm = values[n];
            for (int m = 1; m <= count; ++m) {
                wm *= w;
                c[m - 1] += wm;
            }
        }
        for (auto& v : c) v /= static_cast<double>(total);
        return c;
    };

    int total = initial_nodes;
    values.resize(static_cast<std::size_t>(total));
    for (int n = 0; n < total; ++n) values[n] = g(center + node(n, total));
    std::vector<Complex> prev = estimate(total);
    while (true) {
        if (2 * total > max_nodes) throw NumericFailure("contour quadrature did not converge");
        std::vector<Complex> finer(static_cast<std::size_t>(2 * total));
        for (int n = 0; n < total; ++n) {
            finer[2 * n] = values[n];
            finer[2 * n + 1] = g(center + node(2 * n + 1, 2 * total));
        }
        values = std::move(finer);
        total *= 2;
        std::vector<Complex> next = estimate(total);
        double scale = 0, diff = 0;
        for (int m = 0; m < count; ++m) {
            scale = std::max(scale, std::abs(next[m]));
            diff = std::max(diff, std::abs(next[m] - prev[m]));
        }
        prev = std::move(next);
        if (diff <= agreement * (1 + scale)) break;
    }
    if (nodes_used) *nodes_used = total;
    if (max_modulus) {
        double peak = 0;
        for (const auto& v : values) peak = std::max(peak, std::abs(v));
        *max_modulus = peak;
    }
    return prev;
}

}  // namespace fakemu
