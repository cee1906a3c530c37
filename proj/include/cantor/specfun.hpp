#pragma once

#include <complex>

namespace cantor {

using ComplexValue = std::complex<double>;

/// Gamma function for Re(s) > 0 (Lanczos approximation, g = 7).
/// Throws PoleError at non-positive integers and DomainError elsewhere on Re(s) <= 0.
ComplexValue gamma_complex(ComplexValue s);

/// Riemann zeta for Re(s) > 1 by Euler-Maclaurin summation.
/// Throws DomainError if Re(s) <= 1 + 1e-9.
ComplexValue zeta_complex(ComplexValue s);

/**
 * Euler-Maclaurin tail of the Dirichlet series: sum_{n >= n0} n^{-s} using
 * `order` Bernoulli correction terms. Exposed for cross-checking partial sums.
 */
ComplexValue zeta_tail(ComplexValue s, long n0, int order);

}  // namespace cantor
