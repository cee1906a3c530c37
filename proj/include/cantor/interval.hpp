#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace cantor {

/**
 * Closed real interval [lo, hi] with outward-rounded arithmetic.
 *
 * Every operation widens its result by one ulp on each side, so the result
 * contains every pointwise result of the exact operation applied to members
 * of the operands. This is coarser than directed rounding but needs no
 * control over the FPU rounding mode.
 */
class IntervalValue {
public:
    constexpr IntervalValue() = default;
    constexpr explicit IntervalValue(double point) : lo_(point), hi_(point) {}
    IntervalValue(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!(lo <= hi)) throw std::invalid_argument("IntervalValue: lo > hi");
    }

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double width() const noexcept { return hi_ - lo_; }
    double mid() const noexcept { return lo_ + 0.5 * (hi_ - lo_); }

    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
    bool contains(const IntervalValue& o) const noexcept { return lo_ <= o.lo_ && o.hi_ <= hi_; }

    /// Interval [down(lo), up(hi)], one ulp wider on each side.
    static IntervalValue outward(double lo, double hi) {
        return IntervalValue(down(lo), up(hi));
    }

    friend IntervalValue operator+(const IntervalValue& a, const IntervalValue& b) {
        return outward(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend IntervalValue operator-(const IntervalValue& a, const IntervalValue& b) {
        return outward(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend IntervalValue operator*(const IntervalValue& a, const IntervalValue& b) {
        const double p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_;
        const double p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
        return outward(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
    }
    friend IntervalValue operator*(double s, const IntervalValue& a) {
        return IntervalValue(s) * a;
    }

    IntervalValue& operator+=(const IntervalValue& o) { return *this = *this + o; }

    friend bool operator==(const IntervalValue&, const IntervalValue&) = default;

    friend std::ostream& operator<<(std::ostream& os, const IntervalValue& v) {
        return os << '[' << v.lo_ << ", " << v.hi_ << ']';
    }

    static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
    static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }

private:
    double lo_ = 0.0;
    double hi_ = 0.0;
};

/// exp over an interval; libm exp is faithful to within an ulp, so two ulps of slack.
inline IntervalValue exp(const IntervalValue& x) {
    using IV = IntervalValue;
    return IV(std::max(0.0, IV::down(IV::down(std::exp(x.lo())))), IV::up(IV::up(std::exp(x.hi()))));
}

}  // namespace cantor
