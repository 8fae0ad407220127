#pragma once

// Internal stencil/quadrature helpers shared by the operator application and
// the verification oracles. Not installed.

#include <complex>
#include <vector>

#include "emosc/errors.hpp"

namespace emosc::detail {

using cplx = std::complex<double>;

// 4th-order first derivative on a uniform grid, one-sided at the edges.
inline std::vector<cplx> d_dx(const std::vector<cplx>& f, double h) {
    const int n = static_cast<int>(f.size());
    if (n < 5) throw GridError("derivative stencil needs at least 5 points");
    std::vector<cplx> g(f.size());
    auto at = [&](int i) { return f[static_cast<std::size_t>(i)]; };
    for (int i = 2; i < n - 2; ++i)
        g[static_cast<std::size_t>(i)] =
            (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * h);
    g[0] = (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
    g[1] = (at(2) - at(0)) / (2.0 * h);
    g[static_cast<std::size_t>(n - 2)] = (at(n - 1) - at(n - 3)) / (2.0 * h);
    g[static_cast<std::size_t>(n - 1)] =
        (3.0 * at(n - 1) - 4.0 * at(n - 2) + at(n - 3)) / (2.0 * h);
    return g;
}

// 4th-order second derivative; edge values filled with 2nd-order one-sided
// stencils (only used where the wavefunction has already decayed).
inline std::vector<cplx> d2_dx(const std::vector<cplx>& f, double h) {
    const int n = static_cast<int>(f.size());
    if (n < 5) throw GridError("derivative stencil needs at least 5 points");
    std::vector<cplx> g(f.size());
    const double h2 = h * h;
    auto at = [&](int i) { return f[static_cast<std::size_t>(i)]; };
    for (int i = 2; i < n - 2; ++i)
        g[static_cast<std::size_t>(i)] = (-at(i + 2) + 16.0 * at(i + 1) - 30.0 * at(i) +
                                          16.0 * at(i - 1) - at(i - 2)) /
                                         (12.0 * h2);
    g[0] = (at(0) - 2.0 * at(1) + at(2)) / h2;
    g[1] = (at(0) - 2.0 * at(1) + at(2)) / h2;
    g[static_cast<std::size_t>(n - 2)] = (at(n - 3) - 2.0 * at(n - 2) + at(n - 1)) / h2;
    g[static_cast<std::size_t>(n - 1)] = (at(n - 3) - 2.0 * at(n - 2) + at(n - 1)) / h2;
    return g;
}

// Composite Simpson for an odd number of points; falls back to a trapezoid on
// the last interval when the count is even.
template <typename F>
double simpson(int n, double h, F value) {
    double acc = 0.0;
    int m = n;
    if (m % 2 == 0) m -= 1;
    for (int i = 0; i + 2 < m + 1; i += 2)
        acc += value(i) + 4.0 * value(i + 1) + value(i + 2);
    acc *= h / 3.0;
    if (m != n) acc += 0.5 * h * (value(n - 2) + value(n - 1));
    return acc;
}

} // namespace emosc::detail
