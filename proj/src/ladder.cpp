#include "cantor/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

using Kind = LadderError::Kind;

std::string describe_step(std::size_t k, const Segment& s) {
    std::ostringstream os;
    os.precision(17);
    os << "step " << (k + 1) << " [" << s.a << ", " << s.b << "]";
    return os.str();
}

bool near(double x, double y, double tol) { return std::abs(x - y) <= tol; }

}  // namespace

Ladder::Ladder(std::vector<Segment> segments, std::vector<double> weights)
    : segments_(std::move(segments)), weights_(std::move(weights)) {
    const std::size_t m = segments_.size();
    if (m == 0) throw LadderError(Kind::Shape, "ladder needs at least one step");
    if (weights_.size() != m) {
        throw LadderError(Kind::Shape, "ladder has " + std::to_string(m) + " segments but " +
                                           std::to_string(weights_.size()) + " weights");
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (!std::isfinite(segments_[k].a) || !std::isfinite(segments_[k].b))
            throw LadderError(Kind::Shape, describe_step(k, segments_[k]) + " is not finite");
        if (!std::isfinite(weights_[k]))
            throw LadderError(Kind::Weight, "weight " + std::to_string(k + 1) + " is not finite");
    }
    if (segments_.front().a != 0.0 || segments_.back().b != 1.0) {
        throw LadderError(Kind::Normalization,
                          "ladder must start at 0 and end at 1 (a_1 = 0, b_m = 1)");
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (!(segments_[k].a < segments_[k].b))
            throw LadderError(Kind::EmptyStep, describe_step(k, segments_[k]) + " is empty");
        if (k + 1 < m && segments_[k].b > segments_[k + 1].a) {
            throw LadderError(Kind::Overlap, describe_step(k, segments_[k]) + " overlaps " +
                                                 describe_step(k + 1, segments_[k + 1]));
        }
    }
    for (std::size_t k = 0; k < m; ++k) {
        if (!(weights_[k] > 0.0))
            throw LadderError(Kind::Weight, "weight " + std::to_string(k + 1) + " is not positive");
    }
    const double total = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    if (!near(total, 1.0, kWeightTolerance)) {
        std::ostringstream os;
        os.precision(17);
        os << "weights sum to " << total << ", expected 1";
        throw LadderError(Kind::Weight, os.str());
    }
    for (double& w : weights_) w /= total;

    deltas_.reserve(2 * m - 1);
    for (std::size_t k = 0; k < m; ++k) {
        deltas_.push_back(segments_[k].b - segments_[k].a);
        if (k + 1 < m) deltas_.push_back(segments_[k + 1].a - segments_[k].b);
    }

    // g is accumulated from the top so that g(m-1) = rho_m exactly.
    h_.assign(m + 1, 0.0);
    g_.assign(m + 1, 0.0);
    for (std::size_t k = 1; k <= m; ++k) h_[k] = h_[k - 1] + weights_[k - 1];
    h_[m] = 1.0;
    for (std::size_t k = m; k-- > 0;) g_[k] = g_[k + 1] + weights_[k];
    g_[0] = 1.0;

    eta_ = 1.0 / weights_.back();
    // A single step is the identity ladder C(t) = t, whose growth E ~ e^l / l
    // corresponds to alpha = -1; eta is 1 there and the logarithm is undefined.
    alpha_ = m == 1 ? -1.0 : std::log(deltas_.back()) / std::log(eta_);
}

bool Ladder::is_regular() const noexcept {
    const std::size_t m = steps();
    const double equal = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (!near(weights_[k], equal, kShapeTolerance)) return false;
        if (!near(step_width(k), step_width(0), kShapeTolerance)) return false;
        if (k + 1 < m && !near(gap_width(k), gap_width(0), kShapeTolerance)) return false;
    }
    return true;
}

bool Ladder::is_degenerate() const noexcept {
    for (std::size_t k = 0; k < steps(); ++k) {
        if (!near(weights_[k], step_width(k), kShapeTolerance)) return false;
        if (k + 1 < steps() && gap_width(k) > kShapeTolerance) return false;
    }
    return true;
}

Ladder mirror(const Ladder& ladder) {
    const auto& seg = ladder.segments();
    const auto& w = ladder.weights();
    const std::size_t m = seg.size();
    std::vector<Segment> out(m);
    std::vector<double> weights(m);
    for (std::size_t k = 0; k < m; ++k) {
        out[m - 1 - k] = Segment{1.0 - seg[k].b, 1.0 - seg[k].a};
        weights[m - 1 - k] = w[k];
    }
    return Ladder(std::move(out), std::move(weights));
}

namespace {

// Directed rounding from round-to-nearest results: the exact residual of each
// operation (via fma or two-sum) says which side of the true value we landed on.
double mul_down(double a, double b) {
    const double p = a * b;
    return std::fma(a, b, -p) < 0.0 ? std::nextafter(p, -INFINITY) : p;
}
double mul_up(double a, double b) {
    const double p = a * b;
    return std::fma(a, b, -p) > 0.0 ? std::nextafter(p, INFINITY) : p;
}
double two_sum_error(double a, double b, double s) {
    const double bb = s - a;
    return (a - (s - bb)) + (b - bb);
}
double add_down(double a, double b) {
    const double s = a + b;
    return two_sum_error(a, b, s) < 0.0 ? std::nextafter(s, -INFINITY) : s;
}
double add_up(double a, double b) {
    const double s = a + b;
    return two_sum_error(a, b, s) > 0.0 ? std::nextafter(s, INFINITY) : s;
}
// a / b for a >= 0, b > 0
double div_down(double a, double b) {
    const double q = a / b;
    return std::fma(-q, b, a) < 0.0 ? std::nextafter(q, -INFINITY) : q;
}
double div_up(double a, double b) {
    const double q = a / b;
    return std::fma(-q, b, a) > 0.0 ? std::nextafter(q, INFINITY) : q;
}

}  // namespace

IntervalValue c_enclosure(const Ladder& ladder, double t, int depth) {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("c_enclosure: t must lie in [0, 1]");
    const auto& seg = ladder.segments();
    const std::size_t m = seg.size();
    // C(t) lies in [lo, hi]; the rescaled argument is only known to lie in [tl, th]
    double lo = 0.0, hi = 1.0;
    double tl = t, th = t;
    // lower / upper level index of C at this level for a point s
    auto level_index = [&](double s, bool upper) -> std::size_t {
        for (std::size_t k = 0; k < m; ++k) {
            if (s <= seg[k].a) return k;
            if (s < seg[k].b) return upper ? k + 1 : k;
        }
        return m;
    };
    auto level_down = [&](std::size_t k) { return std::max(lo, add_down(lo, mul_down(add_down(hi, -lo), ladder.h(k)))); };
    auto level_up = [&](std::size_t k) { return std::min(hi, add_up(lo, mul_up(add_up(hi, -lo), ladder.h(k)))); };

    for (int level = 0;; ++level) {
        if (th <= 0.0) return IntervalValue(lo);
        if (tl >= 1.0) return IntervalValue(hi);
        if (level >= depth) break;
        // closed gaps first: C is constant there, including both endpoints
        for (std::size_t k = 0; k + 1 < m; ++k) {
            if (tl >= seg[k].b && th <= seg[k + 1].a) {
                const double v = level_down(k + 1);
                return IntervalValue(v, std::max(v, level_up(k + 1)));
            }
        }
        std::size_t step = m;
        for (std::size_t k = 0; k < m; ++k)
            if (tl >= seg[k].a && th <= seg[k].b) step = k;
        if (step == m) {
            // the argument straddles a step end and a gap; C is monotone
            const double new_lo = level_down(level_index(tl, false));
            return IntervalValue(new_lo, std::max(new_lo, level_up(level_index(th, true))));
        }
        const std::size_t k = step;
        const double new_lo = level_down(k);
        const double new_hi = std::max(new_lo, level_up(k + 1));
        lo = new_lo;
        hi = new_hi;
        const double a = seg[k].a;
        const double width_lo = add_down(seg[k].b, -a), width_hi = add_up(seg[k].b, -a);
        tl = std::clamp(div_down(std::max(0.0, add_down(tl, -a)), width_hi), 0.0, 1.0);
        th = std::clamp(div_up(std::max(0.0, add_up(th, -a)), width_lo), 0.0, 1.0);
    }
    return IntervalValue::outward(lo, hi);
}

std::vector<double> moments(const Ladder& ladder, int max_order) {
    if (max_order < 0) throw DomainError("moments: order must be non-negative");
    const std::size_t m = ladder.steps();
    const auto n = static_cast<std::size_t>(max_order);

    // binom[j][i] via Pascal's triangle
    std::vector<std::vector<double>> binom(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
        binom[j].assign(j + 1, 1.0);
        for (std::size_t i = 1; i < j; ++i) binom[j][i] = binom[j - 1][i - 1] + binom[j - 1][i];
    }

    std::vector<double> M(n + 1, 0.0);
    M[0] = 1.0;
    if (m == 1) {  // C(t) = t; the general pivot vanishes
        for (std::size_t j = 1; j <= n; ++j) M[j] = 1.0 / static_cast<double>(j + 1);
        return M;
    }
    for (std::size_t j = 1; j <= n; ++j) {
        const double pj = static_cast<double>(j);
        double pivot = 1.0;
        double rhs = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double width = ladder.step_width(k);
            const double rho = ladder.weights()[k];
            const double base = ladder.h(k);
            pivot -= width * std::pow(rho, pj);
            double inner = 0.0;
            for (std::size_t i = 0; i < j; ++i) {
                inner += binom[j][i] * std::pow(base, static_cast<double>(j - i)) *
                         std::pow(rho, static_cast<double>(i)) * M[i];
            }
            rhs += width * inner;
            if (k + 1 < m) rhs += ladder.gap_width(k) * std::pow(ladder.h(k + 1), pj);
        }
        M[j] = rhs / pivot;
    }
    return M;
}

}  // namespace cantor
