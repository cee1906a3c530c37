#pragma once

#include <optional>
#include <vector>

#include "cantor/integral.hpp"
#include "cantor/ladder.hpp"
#include "cantor/specfun.hpp"

namespace cantor {

/**
 * Sampled 1-periodic fluctuation Phi of the leading asymptotics
 *
 *     E(l) = H(l) l^alpha e^l + O(1),   H(l) = Phi(log_eta l),
 *
 * with x = log_eta(l) reduced to [0, 1) so that l = 1 maps to x = 0.
 * Between grid points Phi is evaluated by trigonometric interpolation of the
 * samples, which is spectrally accurate because Phi is analytic.
 */
class PeriodicProfile {
public:
    PeriodicProfile(Ladder ladder, double period_base, std::vector<double> samples);

    const Ladder& ladder() const noexcept { return ladder_; }
    double alpha() const noexcept { return ladder_.alpha(); }
    double period_base() const noexcept { return period_base_; }

    std::size_t grid_size() const noexcept { return samples_.size(); }
    /// Grid abscissa j / N.
    double grid_x(std::size_t j) const { return static_cast<double>(j) / static_cast<double>(samples_.size()); }
    const std::vector<double>& samples() const noexcept { return samples_; }

    /// Phi(x) for any real x.
    double phi(double x) const;
    /// H(l) = Phi(log_eta l).
    double H(double lambda) const;
    /// H1(l) = H(l) l^alpha.
    double H1(double lambda) const;

    /// Discrete Fourier coefficient of the samples, n in (-N/2, N/2).
    ComplexValue sample_fourier(int n) const;

    /// Closed-form coefficients c_0..c_N when attached (regular ladders).
    const std::optional<std::vector<ComplexValue>>& fourier() const noexcept { return fourier_; }
    void attach_fourier(std::vector<ComplexValue> coefficients) { fourier_ = std::move(coefficients); }

private:
    Ladder ladder_;
    double period_base_;
    std::vector<double> samples_;
    std::vector<ComplexValue> dft_;  // n = 0..N/2
    std::optional<std::vector<ComplexValue>> fourier_;
};

struct ProfileOptions {
    std::size_t grid_size = 256;
    /// Largest power of eta tried before giving up.
    int max_power = 60;
    /// Successive estimates must agree to this relative tolerance.
    double tolerance = 1e-9;
};

/**
 * Samples Phi(x) ~ e(l) l^{-alpha} at l = eta^{x+K}, raising K until two
 * consecutive powers agree. Throws DegeneracyError for C(t) = t and
 * ConvergenceError if no K up to options.max_power stabilizes.
 */
PeriodicProfile extract_profile(const Ladder& ladder, const EvalConfig& cfg = {},
                                const ProfileOptions& options = {});

/// Closed-form profile of a regular ladder: sum over k in Z of the source term at m^{k+x}.
double tilde_phi_regular(const Ladder& ladder, double x);

/// Fourier coefficient c_n of Phi for a regular ladder, via Gamma and zeta.
ComplexValue fourier_coefficient(const Ladder& ladder, int n);

/**
 * H(l) computed directly as F1(l) + G(l): the normalized integral plus the
 * forward sum of normalized sources. Accurate for every l > 0, not only large l.
 */
double fluctuation(const Ladder& ladder, double lambda, const EvalConfig& cfg = {});

/**
 * R(l) = E(l) - H(l) l^alpha e^l, evaluated without cancellation as
 * -l^alpha e^l G(l). Bounded as l -> infinity.
 */
double first_term_remainder(const Ladder& ladder, double lambda, const EvalConfig& cfg = {});

}  // namespace cantor
