#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "cantor/errors.hpp"
#include "cantor/specfun.hpp"

using namespace cantor;

namespace {

double rel(ComplexValue a, ComplexValue b) { return std::abs(a - b) / std::abs(b); }

std::vector<ComplexValue> grid() {
    std::vector<ComplexValue> pts;
    for (double re : {1.1, 1.5, 1.5849625007211562, 2.0, 2.7, 3.3, 4.0, 5.0})
        for (double im : {0.0, 0.5, 1.0, 3.0, 7.5, 9.064720283654388, 15.0, 25.0, 40.0}) pts.emplace_back(re, im);
    return pts;
}

}  // namespace

TEST_CASE("gamma anchors") {
    CHECK(rel(gamma_complex(1.0), 1.0) <= 1e-14);
    CHECK(rel(gamma_complex(0.5), std::sqrt(std::numbers::pi)) <= 1e-12);
    double fact = 1.0;
    for (int n = 1; n <= 15; ++n) {
        CHECK(rel(gamma_complex(static_cast<double>(n)), fact) <= 1e-13);
        fact *= n;
    }
    // |Gamma(iy)|^2 = pi / (y sinh(pi y)), reached through the recurrence from 1 + iy
    const double y = 2.0;
    const ComplexValue g1 = gamma_complex(ComplexValue(1.0, y));
    CHECK(std::norm(g1) == doctest::Approx(std::numbers::pi * y / std::sinh(std::numbers::pi * y)).epsilon(1e-12));
}

TEST_CASE("gamma recurrence at 2+3i") {
    const ComplexValue s(2.0, 3.0);
    const ComplexValue lhs = gamma_complex(s + 1.0);
    CHECK(std::abs(lhs - s * gamma_complex(s)) / std::abs(lhs) <= 1e-12);
}

TEST_CASE("gamma errors") {
    CHECK_THROWS_AS(gamma_complex(0.0), PoleError);
    CHECK_THROWS_AS(gamma_complex(-1.0), PoleError);
    CHECK_THROWS_AS(gamma_complex(-3.0), PoleError);
    CHECK_THROWS_AS(gamma_complex(ComplexValue(-0.5, 1.0)), DomainError);
    CHECK_THROWS_AS(gamma_complex(ComplexValue(std::nan(""), 0.0)), DomainError);
}

TEST_CASE("zeta anchors") {
    const double pi = std::numbers::pi;
    CHECK(rel(zeta_complex(2.0), pi * pi / 6) <= 1e-10);
    CHECK(rel(zeta_complex(4.0), pi * pi * pi * pi / 90) <= 1e-10);
    CHECK(rel(zeta_complex(6.0), std::pow(pi, 6) / 945) <= 1e-12);
}

TEST_CASE("zeta at log2(3) against brute-force summation") {
    const double s = std::log2(3.0);
    const long N = 1000000;
    double sum = 0.0;
    for (long n = N; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
    // sum_{n>N} n^-s lies between the integrals from N+1 and from N
    const double lo = sum + std::pow(N + 1.0, 1.0 - s) / (s - 1.0);
    const double hi = sum + std::pow(static_cast<double>(N), 1.0 - s) / (s - 1.0);
    const double z = zeta_complex(s).real();
    CHECK(std::abs(zeta_complex(s).imag()) == 0.0);
    CHECK(z >= lo * (1.0 - 1e-13));
    CHECK(z <= hi * (1.0 + 1e-13));
    CHECK(hi - lo < 1e-9 * z);
}

TEST_CASE("zeta errors") {
    CHECK_THROWS_AS(zeta_complex(1.0), DomainError);
    CHECK_THROWS_AS(zeta_complex(ComplexValue(0.5, 14.0)), DomainError);
    CHECK_THROWS_AS(zeta_complex(ComplexValue(1.0 + 1e-10, 3.0)), DomainError);
    CHECK_NOTHROW(zeta_complex(ComplexValue(1.01, 3.0)));
}

TEST_CASE("conjugate symmetry") {
    for (ComplexValue s : grid()) {
        CHECK(rel(gamma_complex(std::conj(s)), std::conj(gamma_complex(s))) <= 1e-12);
        CHECK(rel(zeta_complex(std::conj(s)), std::conj(zeta_complex(s))) <= 1e-12);
    }
}

TEST_CASE("gamma recurrence residual on the grid") {
    for (ComplexValue s : grid()) {
        const ComplexValue next = gamma_complex(s + 1.0);
        CHECK(std::abs(next - s * gamma_complex(s)) / std::abs(next) <= 1e-11);
    }
}

TEST_CASE("zeta against partial sum plus Euler-Maclaurin tail at N = 1000") {
    const long N = 1000;
    for (ComplexValue s : grid()) {
        ComplexValue partial = 0.0;
        for (long n = N - 1; n >= 1; --n) partial += std::pow(static_cast<double>(n), -s);
        const ComplexValue z = zeta_complex(s);
        const ComplexValue direct = partial + zeta_tail(s, N, 4);
        CHECK(std::abs(z - direct) <= 1e-10 * std::abs(z));
    }
}
