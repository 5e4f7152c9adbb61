#pragma once

// Adaptive Gauss-Kronrod 15(7) quadrature for the smooth, exponentially
// decaying reservoir integrands used in this project.

#include <cmath>
#include <cstddef>
#include <utility>

#include "lmg/errors.hpp"

namespace lmg::quad {

struct Options {
    double abs_tol{1e-13};
    double rel_tol{1e-12};
    int max_depth{48};
};

namespace detail {

// 15-point Kronrod nodes on [-1,1] (symmetric; nonnegative half listed) and
// weights, with the embedded 7-point Gauss weights on the shared nodes.
inline constexpr double kNodes[8] = {
    0.0,
    0.2077849550078985,
    0.4058451513773972,
    0.5860872354676911,
    0.7415311855993945,
    0.8648644233597691,
    0.9491079123427585,
    0.9914553711208126,
};
inline constexpr double kWeights[8] = {
    0.2094821410847278,
    0.2044329400752989,
    0.1903505780647854,
    0.1690047266392679,
    0.1406532597155259,
    0.1047900103222502,
    0.0630920926299786,
    0.0229353220105292,
};
// Gauss-7 weights for nodes 0, 2, 4, 6 (the odd Kronrod indices carry none).
inline constexpr double kGaussWeights[4] = {
    0.4179591836734694,
    0.3818300505051189,
    0.2797053914892767,
    0.1294849661688697,
};

template <class F>
std::pair<double, double> gk15(F&& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(c);
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kNodes[i];
        fv[7 - i] = f(c - dx);
        fv[7 + i] = f(c + dx);
    }
    double kronrod = kWeights[0] * fv[7];
    for (int i = 1; i < 8; ++i)
        kronrod += kWeights[i] * (fv[7 - i] + fv[7 + i]);
    double gauss = kGaussWeights[0] * fv[7];
    for (int i = 1; i < 4; ++i)
        gauss += kGaussWeights[i] * (fv[7 - 2 * i] + fv[7 + 2 * i]);
    return {kronrod * half, std::abs(kronrod - gauss) * half};
}

template <class F>
double adapt(F&& f, double a, double b, double tol, int depth, const Options& opt) {
    auto [value, err] = gk15(f, a, b);
    if (err <= tol || err <= opt.rel_tol * std::abs(value))
        return value;
    if (depth >= opt.max_depth)
        throw ConvergenceError("adaptive quadrature failed to converge");
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol, depth + 1, opt) +
           adapt(f, c, b, 0.5 * tol, depth + 1, opt);
}

} // namespace detail

// Integrate f over [a, b].
template <class F>
double integrate(F&& f, double a, double b, Options opt = {}) {
    if (!(b > a))
        return 0.0;
    return detail::adapt(std::forward<F>(f), a, b, opt.abs_tol, 0, opt);
}

} // namespace lmg::quad
