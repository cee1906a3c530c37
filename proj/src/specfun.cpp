#include "cantor/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

// B_{2k} / (2k)! for k = 1..15.
constexpr std::array<double, 15> kBernoulliOverFactorial = {
    0.08333333333333333,     -0.001388888888888889,   3.306878306878307e-05,
    -8.267195767195768e-07,  2.08767569878681e-08,    -5.284190138687493e-10,
    1.3382536530684679e-11,  -3.3896802963225827e-13, 8.586062056277845e-15,
    -2.174868698558062e-16,  5.5090028283602295e-18,  -1.3954464685812522e-19,
    3.534707039629467e-21,   -8.953517427037546e-23,  2.267952452337683e-24,
};

constexpr int kZetaOrder = 12;

ComplexValue lanczos(ComplexValue s) {
    // valid for Re(s) >= 1/2
    const ComplexValue z = s - 1.0;
    ComplexValue x = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) x += kLanczos[i] / (z + static_cast<double>(i));
    const ComplexValue t = z + kLanczosG + 0.5;
    const double half_log_two_pi = 0.5 * std::log(2.0 * std::numbers::pi);
    return std::exp(half_log_two_pi + (z + 0.5) * std::log(t) - t) * x;
}

}  // namespace

ComplexValue gamma_complex(ComplexValue s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("gamma_complex: argument is not finite");
    if (s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::floor(s.real()))
        throw PoleError("gamma_complex: pole at a non-positive integer");
    if (s.real() <= 0.0) throw DomainError("gamma_complex: only Re(s) > 0 is supported");
    if (s.real() < 0.5) return lanczos(s + 1.0) / s;
    return lanczos(s);
}

ComplexValue zeta_tail(ComplexValue s, long n0, int order) {
    const double n = static_cast<double>(n0);
    const double log_n = std::log(n);
    const ComplexValue n_pow = std::exp(-s * log_n);  // n^{-s}
    ComplexValue sum = n * n_pow / (s - 1.0) + 0.5 * n_pow;
    // term_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * n^{-s-2k+1}
    ComplexValue rising = s;
    double n_inv_pow = 1.0 / n;
    const int terms = std::min<int>(order, static_cast<int>(kBernoulliOverFactorial.size()));
    for (int k = 1; k <= terms; ++k) {
        if (k > 1) {
            rising *= (s + static_cast<double>(2 * k - 3)) * (s + static_cast<double>(2 * k - 2));
            n_inv_pow /= n * n;
        }
        sum += kBernoulliOverFactorial[static_cast<std::size_t>(k - 1)] * rising * n_pow * n_inv_pow;
    }
    return sum;
}

ComplexValue zeta_complex(ComplexValue s) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
        throw DomainError("zeta_complex: argument is not finite");
    if (s.real() <= 1.0 + 1e-9) throw DomainError("zeta_complex: only Re(s) > 1 is supported");
    // The Euler-Maclaurin remainder shrinks like (|s| / (2 pi N))^{2k}.
    const long cutoff = 20 + static_cast<long>(std::ceil(std::abs(s)));
    ComplexValue head = 0.0;
    for (long n = cutoff - 1; n >= 1; --n) head += std::exp(-s * std::log(static_cast<double>(n)));
    return head + zeta_tail(s, cutoff, kZetaOrder);
}

}  // namespace cantor
