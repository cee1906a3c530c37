#include "cantor/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

constexpr double kExponentMerge = 1e-12;
constexpr double kAccumulationGap = 1e-9;

bool same_exponent(double a, double b) {
    return std::abs(a - b) <= kExponentMerge * std::max(1.0, std::abs(a));
}

/// Pending exponents with tolerant lookup, so that images landing on the
/// same exponent through different float paths merge.
template <class Value>
typename std::map<double, Value>::iterator find_exponent(std::map<double, Value>& pending, double s) {
    auto it = pending.lower_bound(s - kExponentMerge * std::max(1.0, std::abs(s)));
    if (it != pending.end() && same_exponent(it->first, s)) return it;
    return pending.end();
}

bool below_critical(double s, const std::optional<double>& critical) {
    return !critical || s < *critical - kExponentMerge * std::max(1.0, *critical);
}

void require_expandable(const Ladder& ladder, const char* who) {
    if (ladder.is_degenerate()) {
        throw DegeneracyError(std::string(who) + ": ladder degenerates to C(t) = t");
    }
}

}  // namespace

// ---- AtomSum ---------------------------------------------------------------

double AtomSum::combine(double a, double b) {
    const double sum = a + b;
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(sum) <= kTolerance * scale ? 0.0 : sum;
}

AtomSum& AtomSum::add_constant(double c) {
    const_ = combine(const_, c);
    return *this;
}

AtomSum& AtomSum::add_atom(double scale, double coef) {
    if (!(scale > 0.0) || !std::isfinite(scale)) throw DomainError("AtomSum: atom scale must be positive");
    // reduce the scale into [1, eta) using H1(eta b l) = D H1(b l)
    const double log_eta = std::log(eta_);
    const double power = std::floor(std::log(scale) / log_eta);
    double reduced = scale * std::pow(eta_, -power);
    double shifts = power;
    if (reduced >= eta_ * (1.0 - kTolerance)) {
        reduced /= eta_;
        shifts += 1.0;
    } else if (reduced < 1.0) {
        reduced *= eta_;
        shifts -= 1.0;
    }
    if (std::abs(reduced - 1.0) <= kTolerance) reduced = 1.0;
    coef *= std::pow(period_factor_, shifts);

    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), reduced * (1.0 - kTolerance),
                               [](const Atom& a, double s) { return a.scale < s; });
    if (it != atoms_.end() && std::abs(it->scale - reduced) <= kTolerance * reduced) {
        it->coef = combine(it->coef, coef);
        if (it->coef == 0.0) atoms_.erase(it);
    } else if (coef != 0.0) {
        atoms_.insert(it, Atom{reduced, coef});
    }
    return *this;
}

AtomSum& AtomSum::add(const AtomSum& other, double factor) {
    add_constant(factor * other.const_);
    for (const Atom& a : other.atoms_) add_atom(a.scale, factor * a.coef);
    return *this;
}

AtomSum AtomSum::rescaled(double s) const {
    AtomSum out(eta_, period_factor_);
    out.const_ = const_;
    for (const Atom& a : atoms_) out.add_atom(a.scale * s, a.coef);
    return out;
}

AtomSum AtomSum::times(double factor) const {
    AtomSum out(eta_, period_factor_);
    out.add(*this, factor);
    return out;
}

double AtomSum::sup_bound(double h_max, double alpha, double lambda_min) const {
    double bound = std::abs(const_);
    for (const Atom& a : atoms_) bound += std::abs(a.coef) * h_max * std::pow(a.scale * lambda_min, alpha);
    return bound;
}

double AtomSum::evaluate(const PeriodicProfile& profile, double lambda) const {
    double value = const_;
    for (const Atom& a : atoms_) value += a.coef * profile.H1(a.scale * lambda);
    return value;
}

bool AtomSum::approx_equal(const AtomSum& other, double tol) const {
    auto close = [tol](double x, double y) {
        return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
    };
    if (!close(const_, other.const_)) return false;
    auto covered = [&](const AtomSum& a, const AtomSum& b) {
        for (const Atom& x : a.atoms_) {
            double match = 0.0;
            for (const Atom& y : b.atoms_)
                if (std::abs(x.scale - y.scale) <= tol * x.scale) match = y.coef;
            if (!close(x.coef, match)) return false;
        }
        return true;
    };
    return covered(*this, other) && covered(other, *this);
}

// ---- expansion -------------------------------------------------------------

double Expansion::validity_threshold() const { return std::max(2.0 * log_c2, 20.0); }

std::pair<std::vector<double>, std::vector<double>> simple_expansion_m2(const Ladder& ladder, int count) {
    if (ladder.steps() != 2 || std::abs(ladder.weights()[0] - 0.5) > Ladder::kShapeTolerance ||
        std::abs(ladder.weights()[1] - 0.5) > Ladder::kShapeTolerance) {
        throw LadderError(LadderError::Kind::Shape,
                          "simple_expansion_m2: needs two steps with weights (1/2, 1/2)");
    }
    if (count < 0) throw DomainError("simple_expansion_m2: count must be non-negative");
    const double d1 = ladder.deltas()[0];
    const double d2 = ladder.deltas()[1];
    const double d3 = ladder.deltas()[2];
    const auto n = static_cast<std::size_t>(count);
    std::vector<double> c(n + 1), d(n + 1);
    c[0] = -d2 / d3;
    d[0] = -d1 / d3;
    for (std::size_t k = 0; k < n; ++k) {
        if (k % 2 == 1) {
            c[k + 1] = -d1 / d3 * c[k];
            d[k + 1] = -d1 / d3 * d[k];
        } else {
            c[k + 1] = c[k / 2] / d3 - d1 / d3 * c[k];
            d[k + 1] = d[k / 2] - d1 / d3 * d[k];
        }
    }
    return {std::move(c), std::move(d)};
}

std::optional<double> critical_point(const Ladder& ladder) {
    const auto& w = ladder.weights();
    const double last = w.back();
    std::optional<double> best;
    for (std::size_t k = 0; k + 1 < w.size(); ++k) {
        if (w[k] < last - Ladder::kShapeTolerance) {
            const double candidate = ladder.g(k + 1) / (last - w[k]);
            if (!best || candidate < *best) best = candidate;
        }
    }
    return best;
}

Expansion general_expansion(const Ladder& ladder, const PeriodicProfile& profile, double max_exponent) {
    require_expandable(ladder, "general_expansion");
    const std::size_t m = ladder.steps();
    const double eta = ladder.eta();
    const double d_last = ladder.last_step_width();
    const auto& w = ladder.weights();

    Expansion out;
    out.critical = critical_point(ladder);
    if (out.critical && max_exponent >= *out.critical) {
        std::ostringstream os;
        os.precision(17);
        os << "general_expansion: requested exponent " << max_exponent
           << " is not below the critical point " << *out.critical;
        throw CriticalPointError(*out.critical, os.str());
    }

    // growth certificate constants
    out.epsilon = (eta - 1.0) / eta;
    for (std::size_t k = 0; k + 1 < m; ++k) out.epsilon = std::min(out.epsilon, ladder.g(k + 1) / w[k]);
    out.log_c2 = -std::log(d_last / 4.0) / out.epsilon;
    if (!out.critical) {
        out.delta = eta - 1.0;
        for (std::size_t k = 0; k + 1 < m; ++k) out.delta = std::min(out.delta, eta * ladder.g(k + 1));
    }

    std::map<double, AtomSum> pending;
    auto push = [&](double s, const AtomSum& c) {
        if (auto it = find_exponent(pending, s); it != pending.end()) {
            it->second.add(c);
        } else {
            pending.emplace(s, c);
        }
    };

    // first source: exponents eta g_k with constant gap part and one atom
    for (std::size_t k = 0; k + 1 < m; ++k) {
        AtomSum c(eta, d_last);
        c.add_constant(-ladder.gap_width(k) / d_last);
        c.add_atom(eta * w[k], -ladder.step_width(k) / d_last);
        push(eta * ladder.g(k + 1), c);
    }

    double h_max = 0.0;
    for (double v : profile.samples()) h_max = std::max(h_max, v);
    h_max *= 1.0 + 1e-6;
    const double lambda_min = out.log_c2;
    double c1_initial = 0.0;
    for (const auto& [s, c] : pending) {
        c1_initial = std::max(c1_initial, c.sup_bound(h_max, ladder.alpha(), lambda_min) *
                                              std::exp(-out.log_c2 * s));
    }
    out.c1 = 2.0 * c1_initial;

    while (!pending.empty()) {
        auto it = pending.begin();
        const double s = it->first;
        if (s > max_exponent) break;
        AtomSum c = std::move(it->second);
        pending.erase(it);
        if (c.is_zero()) continue;  // a vanished coefficient has vanishing images

        push(eta * s, c.rescaled(eta).times(1.0 / d_last));
        for (std::size_t k = 0; k + 1 < m; ++k) {
            const double image = eta * (ladder.g(k + 1) + w[k] * s);
            push(image, c.rescaled(w[k] * eta).times(-ladder.step_width(k) / d_last));
        }
        out.terms.push_back(ExpansionTerm{s, std::move(c)});
    }

    if (out.critical) {
        bool alive = false;
        for (const auto& [s, c] : pending)
            if (below_critical(s, out.critical) && !c.is_zero()) alive = true;
        if (!alive) out.status = ExpansionStatus::FiniteBelowCritical;
    }
    return out;
}

double eval_expansion(const Expansion& expansion, const PeriodicProfile& profile, double lambda,
                      std::size_t count, const PartialSumOptions& options) {
    const double threshold = options.threshold.value_or(expansion.validity_threshold());
    if (options.strict && lambda < threshold) {
        std::ostringstream os;
        os << "eval_expansion: l = " << lambda << " is below the validity threshold " << threshold;
        throw DomainError(os.str());
    }
    double sum = profile.H1(lambda);
    const std::size_t n = std::min(count, expansion.terms.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto& term = expansion.terms[k];
        sum += term.coefficient.evaluate(profile, lambda) * std::exp(-term.exponent * lambda);
    }
    return sum;
}

ExponentSequence exponent_sequence(const Ladder& ladder, std::size_t count) {
    require_expandable(ladder, "exponent_sequence");
    const std::size_t m = ladder.steps();
    const double eta = ladder.eta();
    const auto critical = critical_point(ladder);

    std::map<double, bool> pending;
    auto push = [&](double s) {
        if (find_exponent(pending, s) == pending.end()) pending.emplace(s, true);
    };
    for (std::size_t k = 0; k + 1 < m; ++k) push(eta * ladder.g(k + 1));

    ExponentSequence out;
    while (out.values.size() < count && !pending.empty()) {
        const double s = pending.begin()->first;
        pending.erase(pending.begin());
        if (!below_critical(s, critical)) {
            out.truncated = true;
            break;
        }
        if (!out.values.empty() && s - out.values.back() < kAccumulationGap) {
            out.truncated = true;
            break;
        }
        out.values.push_back(s);
        push(eta * s);
        for (std::size_t k = 0; k + 1 < m; ++k) push(eta * (ladder.g(k + 1) + ladder.weights()[k] * s));
    }
    return out;
}

}  // namespace cantor
