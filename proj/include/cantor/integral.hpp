#pragma once

#include "cantor/interval.hpp"
#include "cantor/ladder.hpp"

namespace cantor {

/// Tuning for the scaled-integral evaluator.
struct EvalConfig {
    /// Arguments below this are evaluated by the moment Taylor series.
    double base_threshold = 0.5;
    /// Number of moments in the Taylor series.
    int taylor_order = 30;
    int enclosure_depth = 20;
    double rel_tol = 1e-10;

    /// Throws DomainError unless the Taylor tail bound at base_threshold is below rel_tol.
    void validate() const;
};

/**
 * e(l) = exp(-l) * integral_0^1 exp(l C(t)) dt for l >= 0, computed from the
 * scaled self-similar recursion
 *
 *     e(l) = sum_k D_{2k-1} exp(-g_k l) e(rho_k l) + sum_k D_{2k} exp(-g_k l),
 *
 * descending until the argument drops below cfg.base_threshold. Result lies in (0, 1].
 */
double eval_scaled_E(const Ladder& ladder, double lambda, const EvalConfig& cfg = {});

/// Rigorous interval containing e(l), refined `depth` levels from [exp(-l), 1].
IntervalValue enclose_E(const Ladder& ladder, double lambda, int depth);

/// E(-l) = integral_0^1 exp(-l C(t)) dt for l > 0, reduced to the mirrored ladder.
double eval_E_negative(const Ladder& ladder, double lambda, const EvalConfig& cfg = {});

}  // namespace cantor
