#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cantor/asymptotics.hpp"
#include "cantor/ladder.hpp"

namespace cantor {

/// One fluctuation atom: coef * H(scale * l) * (scale * l)^alpha = coef * H1(scale * l).
struct Atom {
    double scale = 1.0;
    double coef = 0.0;
};

/**
 * Exact coefficient of an expansion term: a constant plus finitely many
 * fluctuation atoms. Because H is eta-periodic in log scale,
 * H1(eta * b * l) = D * H1(b * l) with D the last step width, so every atom
 * is stored with its scale reduced to [1, eta). Atoms of equal scale are
 * merged; coefficients that cancel to within 1e-12 of the magnitudes being
 * combined are removed.
 */
class AtomSum {
public:
    static constexpr double kTolerance = 1e-12;

    AtomSum(double eta, double period_factor) : eta_(eta), period_factor_(period_factor) {}

    double const_part() const noexcept { return const_; }
    const std::vector<Atom>& atoms() const noexcept { return atoms_; }

    AtomSum& add_constant(double c);
    AtomSum& add_atom(double scale, double coef);
    /// this += factor * other
    AtomSum& add(const AtomSum& other, double factor = 1.0);

    /// The coefficient function l -> c(s * l).
    AtomSum rescaled(double s) const;
    AtomSum times(double factor) const;

    /// Every coefficient is exactly zero after cancellation cleanup.
    bool is_zero() const noexcept { return const_ == 0.0 && atoms_.empty(); }

    /// Sup of |c(l)| over l >= lambda_min, from max H over one period.
    double sup_bound(double h_max, double alpha, double lambda_min) const;

    double evaluate(const PeriodicProfile& profile, double lambda) const;

    /// Same constant and atoms up to `tol`, relative to the larger magnitude.
    bool approx_equal(const AtomSum& other, double tol) const;

private:
    static double combine(double a, double b);

    double eta_;
    double period_factor_;
    double const_ = 0.0;
    std::vector<Atom> atoms_;  // sorted by scale
};

/// Term c(l) exp(-exponent * l) of the expansion of e(l) - H1(l).
struct ExpansionTerm {
    double exponent;
    AtomSum coefficient;
};

enum class ExpansionStatus {
    /// Every term up to the requested exponent was emitted.
    Complete,
    /// A critical point exists and every coefficient below it vanished.
    FiniteBelowCritical,
};

/**
 * Result of the term-separation iteration:
 *
 *     e(l) = H1(l) + sum_terms c(l) exp(-exponent * l).
 *
 * The growth constants certify |c_s(l)| <= c1 * exp(log_c2 * s) for
 * l >= log_c2; `delta` is the minimal exponent gain per step (zero when the
 * exponents accumulate at a critical point).
 */
struct Expansion {
    std::vector<ExpansionTerm> terms;
    ExpansionStatus status = ExpansionStatus::Complete;
    std::optional<double> critical;
    double epsilon = 0.0;
    double delta = 0.0;
    double log_c2 = 0.0;
    double c1 = 0.0;

    /// Lower end of the range where partial sums are trusted: max(2 ln C2, 20).
    double validity_threshold() const;
};

/// Coefficient lists C_0..C_K and D_0..D_K for two steps with weights 1/2.
std::pair<std::vector<double>, std::vector<double>> simple_expansion_m2(const Ladder& ladder, int count);

/**
 * Separates terms with exponent <= max_exponent. Requires either no critical
 * point or max_exponent below it (CriticalPointError otherwise).
 */
Expansion general_expansion(const Ladder& ladder, const PeriodicProfile& profile, double max_exponent);

struct PartialSumOptions {
    bool strict = true;
    /// Overrides Expansion::validity_threshold() when set.
    std::optional<double> threshold;
};

/// H1(l) + the first `count` terms; approximates e(l) for l above the validity threshold.
double eval_expansion(const Expansion& expansion, const PeriodicProfile& profile, double lambda,
                      std::size_t count, const PartialSumOptions& options = {});

/// min over i with rho_i < rho_m of g_i / (rho_m - rho_i); empty when rho_m is the smallest weight.
std::optional<double> critical_point(const Ladder& ladder);

struct ExponentSequence {
    std::vector<double> values;
    /// Generation stopped early because the exponents accumulate at a critical point.
    bool truncated = false;
};

/// The first `count` exponents produced by the term-separation maps.
ExponentSequence exponent_sequence(const Ladder& ladder, std::size_t count);

}  // namespace cantor
