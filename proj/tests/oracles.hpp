#pragma once

// Independent reference computations used only by the tests. None of these
// route through the evaluator recursion or the mirror transform.

#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "cantor/interval.hpp"
#include "cantor/ladder.hpp"

namespace oracle {

/// Classical Cantor function from ternary digits: stop at the first digit 1.
/// The double t is an exact dyadic rational p / 2^K, so its ternary digits are
/// produced exactly with integer arithmetic.
inline double cantor_by_digits(double t, int digits = 60) {
    if (t >= 1.0) return 1.0;
    if (t <= 0.0) return 0.0;
    int exponent = 0;
    const double mant = std::frexp(t, &exponent);  // t = mant * 2^exponent
    const int K = 53 - exponent;
    if (K > 120) return 0.0;  // t < 2^-67, so C(t) < 2^-41
    using u128 = unsigned __int128;
    u128 p = static_cast<u128>(std::ldexp(mant, 53));
    const u128 one = static_cast<u128>(1) << K;
    double value = 0.0;
    double bit = 0.5;
    for (int i = 0; i < digits; ++i) {
        p *= 3;
        const int d = static_cast<int>(p >> K);
        p &= one - 1;
        if (d == 1) return value + bit;
        if (d == 2) value += bit;
        bit *= 0.5;
    }
    return value;
}

/**
 * Integral of g(C(t)) over [0,1] by walking the cells of the ladder down to
 * `depth` levels. Gaps contribute exactly; each unresolved step cell of
 * length len on which C rises from c0 to c0 + r contributes len*g(c0 + r/2)
 * to `estimate` and the monotone-g bracket [len*min, len*max] to `bound`.
 */
struct CellSum {
    double estimate = 0.0;
    double lo = 0.0;
    double hi = 0.0;
    std::uint64_t leaves = 0;
};

inline void walk_cells(const cantor::Ladder& L, const std::function<double(double)>& g, int depth,
                       double t0, double len, double c0, double r, CellSum& acc,
                       const std::function<void(double, double, double, double)>& on_leaf) {
    if (depth == 0) {
        const double ga = g(c0), gb = g(c0 + r);
        acc.estimate += len * g(c0 + 0.5 * r);
        acc.lo += len * std::min(ga, gb);
        acc.hi += len * std::max(ga, gb);
        if (on_leaf) on_leaf(t0, len, c0, r);
        ++acc.leaves;
        return;
    }
    const auto& seg = L.segments();
    for (std::size_t k = 0; k < L.steps(); ++k) {
        walk_cells(L, g, depth - 1, t0 + len * seg[k].a, len * L.step_width(k), c0 + r * L.h(k),
                   r * L.weights()[k], acc, on_leaf);
        if (k + 1 < L.steps()) {
            const double gap = len * L.gap_width(k);
            const double v = len == 0.0 ? 0.0 : g(c0 + r * L.h(k + 1));
            acc.estimate += gap * v;
            acc.lo += gap * v;
            acc.hi += gap * v;
        }
    }
}

inline CellSum cell_sum(const cantor::Ladder& L, const std::function<double(double)>& g, int depth,
                        const std::function<void(double, double, double, double)>& on_leaf = {}) {
    CellSum acc;
    walk_cells(L, g, depth, 0.0, 1.0, 0.0, 1.0, acc, on_leaf);
    // summation rounding
    acc.lo -= 1e-14 * std::abs(acc.lo);
    acc.hi += 1e-14 * std::abs(acc.hi);
    return acc;
}

/**
 * Richardson-extrapolated cell quadrature. The midpoint error of level d is
 * asymptotically A q^d with q = sum_k width_k rho_k, so two consecutive
 * levels eliminate it.
 */
inline double cell_quadrature(const cantor::Ladder& L, const std::function<double(double)>& g, int depth) {
    double q = 0.0;
    for (std::size_t k = 0; k < L.steps(); ++k) q += L.step_width(k) * L.weights()[k];
    const double coarse = cell_sum(L, g, depth - 1).estimate;
    const double fine = cell_sum(L, g, depth).estimate;
    return (fine - q * coarse) / (1.0 - q);
}

/// Random valid ladder with m steps; a fraction of gaps may be empty.
inline cantor::Ladder random_ladder(std::mt19937_64& rng, std::size_t m) {
    std::uniform_real_distribution<double> u(0.05, 1.0);
    std::bernoulli_distribution empty_gap(0.2);
    std::vector<double> parts;
    for (std::size_t k = 0; k < m; ++k) {
        parts.push_back(u(rng));
        if (k + 1 < m) parts.push_back(empty_gap(rng) ? 0.0 : u(rng));
    }
    double total = 0.0;
    for (double p : parts) total += p;
    std::vector<cantor::Segment> segs;
    double pos = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double a = pos;
        pos += parts[2 * k] / total;
        double b = k + 1 == m ? 1.0 : pos;
        segs.push_back({a, b});
        if (k + 1 < m) pos += parts[2 * k + 1] / total;
    }
    segs.front().a = 0.0;
    std::vector<double> w;
    double wsum = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        w.push_back(u(rng));
        wsum += w.back();
    }
    for (double& x : w) x /= wsum;
    return cantor::Ladder(segs, w);
}

}  // namespace oracle
