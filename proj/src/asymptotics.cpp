#include "cantor/asymptotics.hpp"

#include <cmath>
#include <numbers>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frac(double x) {
    double f = x - std::floor(x);
    return f >= 1.0 ? 0.0 : f;
}

void require_nondegenerate(const Ladder& ladder, const char* who) {
    if (ladder.is_degenerate()) {
        throw DegeneracyError(std::string(who) +
                              ": ladder degenerates to C(t) = t, the profile is constant");
    }
}

void require_regular(const Ladder& ladder, const char* who) {
    if (!ladder.is_regular()) throw RegularityError(std::string(who) + ": ladder is not regular");
    require_nondegenerate(ladder, who);
}

/// exp(shift) * f(mu) exp(-eta mu), where f collects every term of the
/// recursion at argument eta*mu except the last step.
double scaled_source(const Ladder& ladder, double mu, double shift, const EvalConfig& cfg) {
    const double eta = ladder.eta();
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < ladder.steps(); ++k) {
        const double decay = std::exp(shift - ladder.g(k + 1) * eta * mu);
        if (decay == 0.0) continue;
        const double rho = ladder.weights()[k];
        sum += decay * (ladder.step_width(k) * eval_scaled_E(ladder, rho * eta * mu, cfg) +
                        ladder.gap_width(k));
    }
    return sum;
}

/// sum_{k >= 0} eta^{-k alpha} exp(shift) f(eta^k l) exp(-eta^{k+1} l)
double forward_sum(const Ladder& ladder, double lambda, double shift, const EvalConfig& cfg) {
    const double eta = ladder.eta();
    double total = 0.0;
    double weight = 1.0;
    double mu = lambda;
    for (int k = 0; k < 200; ++k) {
        const double term = weight * scaled_source(ladder, mu, shift, cfg);
        total += term;
        if (term <= 1e-18 * std::abs(total)) break;
        weight *= std::pow(eta, -ladder.alpha());
        mu *= eta;
    }
    return total;
}

/// Source term of the regular-ladder profile, written with expm1 so that it
/// is free of cancellation both for l -> 0 and l -> infinity.
double tilde_source(const Ladder& ladder, double lambda) {
    const double m = static_cast<double>(ladder.steps());
    const double ratio = ladder.gap_width(0) / ladder.step_width(0);
    const double num = -std::expm1(-(m - 1.0) * lambda);
    const double den = std::expm1(-lambda) * std::expm1(-m * lambda);
    return ratio * std::exp(-lambda) * num / den * std::pow(lambda, -ladder.alpha());
}

}  // namespace

PeriodicProfile::PeriodicProfile(Ladder ladder, double period_base, std::vector<double> samples)
    : ladder_(std::move(ladder)), period_base_(period_base), samples_(std::move(samples)) {
    const std::size_t n = samples_.size();
    if (n < 2) throw DomainError("PeriodicProfile: need at least two samples");
    dft_.assign(n / 2 + 1, ComplexValue{});
    for (std::size_t k = 0; k <= n / 2; ++k) {
        ComplexValue acc{};
        for (std::size_t j = 0; j < n; ++j) {
            const double angle = -kTwoPi * static_cast<double>(k * j % n) / static_cast<double>(n);
            acc += samples_[j] * ComplexValue(std::cos(angle), std::sin(angle));
        }
        dft_[k] = acc / static_cast<double>(n);
    }
    // trailing coefficients far below the mean carry only rounding noise
    const double floor = 1e-18 * std::abs(dft_[0]);
    while (dft_.size() > 1 && std::abs(dft_.back()) <= floor) dft_.pop_back();
}

double PeriodicProfile::phi(double x) const {
    const std::size_t n = samples_.size();
    const double t = frac(x);
    double value = dft_[0].real();
    for (std::size_t k = 1; k < dft_.size(); ++k) {
        const double angle = kTwoPi * static_cast<double>(k) * t;
        const double term = dft_[k].real() * std::cos(angle) - dft_[k].imag() * std::sin(angle);
        // the Nyquist mode of an even grid appears once, not as a conjugate pair
        value += (2 * k == n) ? term : 2.0 * term;
    }
    return value;
}

double PeriodicProfile::H(double lambda) const {
    if (!(lambda > 0.0)) throw DomainError("PeriodicProfile::H: argument must be positive");
    return phi(std::log(lambda) / std::log(period_base_));
}

double PeriodicProfile::H1(double lambda) const {
    return H(lambda) * std::pow(lambda, alpha());
}

ComplexValue PeriodicProfile::sample_fourier(int n) const {
    const auto k = static_cast<std::size_t>(std::abs(n));
    if (2 * k >= samples_.size()) throw DomainError("sample_fourier: index beyond Nyquist");
    const ComplexValue c = k < dft_.size() ? dft_[k] : ComplexValue{};
    return n >= 0 ? c : std::conj(c);
}

PeriodicProfile extract_profile(const Ladder& ladder, const EvalConfig& cfg,
                                const ProfileOptions& options) {
    require_nondegenerate(ladder, "extract_profile");
    if (options.grid_size < 2) throw DomainError("extract_profile: grid_size must be >= 2");
    const double eta = ladder.eta();
    const double alpha = ladder.alpha();

    std::vector<double> samples(options.grid_size);
    for (std::size_t j = 0; j < options.grid_size; ++j) {
        const double x = static_cast<double>(j) / static_cast<double>(options.grid_size);
        double previous = std::nan("");
        bool converged = false;
        for (int power = 0; power <= options.max_power; ++power) {
            const double lambda = std::pow(eta, x + power);
            const double estimate = eval_scaled_E(ladder, lambda, cfg) * std::pow(lambda, -alpha);
            if (std::abs(estimate - previous) <= options.tolerance * std::abs(estimate)) {
                samples[j] = estimate;
                converged = true;
                break;
            }
            previous = estimate;
        }
        if (!converged) {
            throw ConvergenceError("extract_profile: profile did not stabilize within eta^" +
                                   std::to_string(options.max_power));
        }
    }
    return PeriodicProfile(ladder, eta, std::move(samples));
}

double tilde_phi_regular(const Ladder& ladder, double x) {
    require_regular(ladder, "tilde_phi_regular");
    const double m = static_cast<double>(ladder.steps());
    const double t = frac(x);

    double sum = 0.0;
    for (int k = 0;; ++k) {  // growing arguments: double-exponential decay
        const double term = tilde_source(ladder, std::pow(m, k + t));
        sum += term;
        if (term <= 1e-18 * sum || k > 64) break;
    }
    // shrinking arguments: terms ~ l^{-alpha-1}, geometric with ratio m^{alpha+1}
    const double ratio = std::pow(m, ladder.alpha() + 1.0);
    for (int k = -1;; --k) {
        const double term = tilde_source(ladder, std::pow(m, k + t));
        sum += term;
        if (term <= 1e-18 * sum || k < -200000) {
            sum += term * ratio / (1.0 - ratio);
            break;
        }
    }
    return sum;
}

ComplexValue fourier_coefficient(const Ladder& ladder, int n) {
    require_regular(ladder, "fourier_coefficient");
    const double m = static_cast<double>(ladder.steps());
    const double log_m = std::log(m);
    const double d1 = ladder.step_width(0);
    const double d2 = ladder.gap_width(0);
    const ComplexValue s(-ladder.alpha(), -kTwoPi * static_cast<double>(n) / log_m);
    return d2 * (1.0 - d1) / (d1 * log_m) * gamma_complex(s) * zeta_complex(s);
}

double fluctuation(const Ladder& ladder, double lambda, const EvalConfig& cfg) {
    require_nondegenerate(ladder, "fluctuation");
    if (!(lambda > 0.0)) throw DomainError("fluctuation: argument must be positive");
    const double normalized = eval_scaled_E(ladder, lambda, cfg) * std::pow(lambda, -ladder.alpha());
    const double forward =
        std::pow(lambda, -ladder.alpha()) * forward_sum(ladder, lambda, 0.0, cfg) / ladder.last_step_width();
    return normalized + forward;
}

double first_term_remainder(const Ladder& ladder, double lambda, const EvalConfig& cfg) {
    require_nondegenerate(ladder, "first_term_remainder");
    if (!(lambda > 0.0)) throw DomainError("first_term_remainder: argument must be positive");
    return -forward_sum(ladder, lambda, lambda, cfg) / ladder.last_step_width();
}

}  // namespace cantor
