#pragma once

#include <cstddef>
#include <vector>

#include "cantor/interval.hpp"

namespace cantor {

struct Segment {
    double a = 0.0;
    double b = 0.0;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/**
 * A generalized Cantor ladder: the continuous non-decreasing fixed point C of
 * the self-similar construction built from m steps [a_k, b_k] with weights
 * rho_k. On step k the ladder is a rescaled copy of itself lifted to level
 * h_{k-1}; on the gap after step k it is constant at h_k.
 *
 * Indices in this interface are zero-based: step k (0 <= k < m) spans
 * segments()[k], has weight weights()[k] and width step_width(k); gap k
 * (0 <= k < m-1) lies between steps k and k+1. Level h(k) is the sum of the
 * first k weights, so h(0) = 0 and h(m) = 1; g(k) = 1 - h(k).
 *
 * Immutable after construction.
 */
class Ladder {
public:
    static constexpr double kWeightTolerance = 1e-12;
    static constexpr double kShapeTolerance = 1e-12;

    /// Validates and derives all quantities. Throws LadderError.
    Ladder(std::vector<Segment> segments, std::vector<double> weights);

    std::size_t steps() const noexcept { return segments_.size(); }
    const std::vector<Segment>& segments() const noexcept { return segments_; }
    const std::vector<double>& weights() const noexcept { return weights_; }

    /// Widths Delta_1..Delta_{2m-1} of the alternating step/gap partition of [0,1].
    const std::vector<double>& deltas() const noexcept { return deltas_; }
    double step_width(std::size_t k) const { return deltas_.at(2 * k); }
    double gap_width(std::size_t k) const { return deltas_.at(2 * k + 1); }

    double h(std::size_t k) const { return h_.at(k); }
    double g(std::size_t k) const { return g_.at(k); }
    const std::vector<double>& h_levels() const noexcept { return h_; }
    const std::vector<double>& g_levels() const noexcept { return g_; }

    /// Scaling base 1/rho_m of the leading asymptotics.
    double eta() const noexcept { return eta_; }
    /// Power log_eta(width of the last step), always negative.
    double alpha() const noexcept { return alpha_; }
    /// Width of the last step; equals eta^alpha.
    double last_step_width() const noexcept { return deltas_.back(); }

    /// Equal weights 1/m, equal step widths and equal gap widths.
    bool is_regular() const noexcept;
    /// rho_k equals the width of step k and all gaps vanish, so C(t) = t.
    bool is_degenerate() const noexcept;

    friend bool operator==(const Ladder& a, const Ladder& b) {
        return a.segments_ == b.segments_ && a.weights_ == b.weights_;
    }

private:
    std::vector<Segment> segments_;
    std::vector<double> weights_;
    std::vector<double> deltas_;
    std::vector<double> h_;
    std::vector<double> g_;
    double eta_ = 0.0;
    double alpha_ = 0.0;
};

/// Ladder C1 with C1(t) = 1 - C(1 - t): reflected steps, reversed weights.
Ladder mirror(const Ladder& ladder);

/**
 * Interval containing C(t), obtained by descending at most `depth` levels of
 * the piecewise self-similar form. Points that land in a gap (or on an
 * endpoint) within that many levels give a degenerate interval.
 */
IntervalValue c_enclosure(const Ladder& ladder, double t, int depth);

/// Moments M_j = integral of C(t)^j over [0,1] for j = 0..max_order.
std::vector<double> moments(const Ladder& ladder, int max_order);

}  // namespace cantor
