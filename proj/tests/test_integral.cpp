#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "cantor/errors.hpp"
#include "cantor/integral.hpp"
#include "ladders.hpp"
#include "oracles.hpp"

using namespace cantor;

namespace {

std::vector<Ladder> zoo() {
    return {fixtures::classical(), fixtures::cantor3(),   fixtures::rho13_23(),   fixtures::asymmetric(),
            fixtures::regular3(),  fixtures::uneven_half(), fixtures::descending3()};
}

double closed_form_degenerate(double lambda) { return -std::expm1(-lambda) / lambda; }

// right-hand side of the scaled self-similarity identity, built from independent calls
double reassembled(const Ladder& L, double lambda) {
    double total = 0.0;
    for (std::size_t k = 0; k < L.steps(); ++k) {
        const double w = std::exp(-L.g(k + 1) * lambda);
        total += L.step_width(k) * w * eval_scaled_E(L, L.weights()[k] * lambda);
        if (k + 1 < L.steps()) total += L.gap_width(k) * w;
    }
    return total;
}

}  // namespace

TEST_CASE("value at zero") {
    for (const Ladder& L : zoo()) CHECK(eval_scaled_E(L, 0.0) == 1.0);
    CHECK(eval_scaled_E(fixtures::degenerate(), 0.0) == 1.0);
}

TEST_CASE("degenerate ladders follow the closed form") {
    const Ladder two({{0.0, 0.5}, {0.5, 1.0}}, {0.5, 0.5});
    const Ladder three({{0.0, 0.2}, {0.2, 0.7}, {0.7, 1.0}}, {0.2, 0.5, 0.3});
    CHECK(eval_scaled_E(fixtures::degenerate(), 1.0) == doctest::Approx(0.6321205588285577).epsilon(1e-14));
    for (int i = 0; i < 50; ++i) {
        const double lambda = std::pow(10.0, -2.0 + 4.0 * i / 49.0);
        const double ref = closed_form_degenerate(lambda);
        for (const Ladder& L : {fixtures::degenerate(), two, three})
            CHECK(std::abs(eval_scaled_E(L, lambda) - ref) <= 1e-10 * ref);
    }
}

TEST_CASE("enclosure anchors") {
    const Ladder L = fixtures::classical();
    CHECK(enclose_E(L, 0.0, 5) == IntervalValue(1.0));
    const auto d0 = enclose_E(L, 4.0, 0);
    CHECK(d0.lo() <= std::exp(-4.0));
    CHECK(d0.lo() >= std::exp(-4.0) * (1 - 1e-14));  // a few ulps of outward rounding
    CHECK(d0.hi() == 1.0);
    CHECK(enclose_E(fixtures::degenerate(), 1.0, 10).contains(0.6321205588285577));
    CHECK_THROWS_AS(enclose_E(L, 1.0, -1), DomainError);
}

TEST_CASE("sandwich and monotone enclosure widths") {
    for (const Ladder& L : zoo()) {
        for (double lambda : {0.05, 0.7, 1.0, 3.0, 10.0, 25.0, 60.0}) {
            const double v = eval_scaled_E(L, lambda);
            double prev = 2.0;
            for (int d = 0; d <= 14; ++d) {
                const auto iv = enclose_E(L, lambda, d);
                CHECK(iv.contains(v));
                CHECK(iv.width() <= prev);
                prev = iv.width();
            }
        }
    }
}

TEST_CASE("classical cantor at lambda = 10 lies in the depth-20 enclosure") {
    const Ladder L = fixtures::classical();
    const double v = eval_scaled_E(L, 10.0);
    const auto iv = enclose_E(L, 10.0, 20);
    CHECK(iv.contains(v));
    CHECK(iv.width() <= 1e-6 * v);
    CHECK(v == doctest::Approx(0.051873792934583517).epsilon(1e-12));
}

TEST_CASE("rel_tol is honored against deep enclosures") {
    for (const Ladder& L : {fixtures::classical(), fixtures::asymmetric(), fixtures::descending3()}) {
        for (double lambda : {0.3, 2.0, 8.0}) {
            const double v = eval_scaled_E(L, lambda);
            const auto iv = enclose_E(L, lambda, 45);
            CHECK(iv.width() < 1e-10 * v);
            CHECK(std::abs(v - iv.mid()) <= 1e-10 * v);
        }
    }
}

TEST_CASE("self-similarity residual") {
    for (const Ladder& L : zoo()) {
        for (int i = 0; i < 25; ++i) {
            const double lambda = 0.1 * std::pow(500.0, i / 24.0);
            const double lhs = eval_scaled_E(L, lambda);
            CHECK(std::abs(lhs - reassembled(L, lambda)) <= 10 * 1e-10 * lhs);
        }
    }
}

TEST_CASE("bounds") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const Ladder L = oracle::random_ladder(rng, 1 + trial % 5);
        for (double lambda : {0.0, 0.01, 0.4, 0.6, 5.0, 50.0, 300.0, 700.0}) {
            const double v = eval_scaled_E(L, lambda);
            CHECK(v > 0.0);
            CHECK(v <= 1.0);
        }
    }
}

TEST_CASE("negative arguments") {
    CHECK(eval_E_negative(fixtures::degenerate(), 1.0) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    const Ladder C = fixtures::classical();
    CHECK(eval_E_negative(C, 5.0) == doctest::Approx(eval_scaled_E(mirror(C), 5.0)).epsilon(1e-15));
    CHECK(eval_E_negative(C, 5.0) == doctest::Approx(eval_scaled_E(C, 5.0)).epsilon(1e-13));

    // E(-3) = int exp(-3 C(t)) dt by cell quadrature of the original ladder
    const Ladder A = fixtures::asymmetric();
    const double ref = oracle::cell_quadrature(A, [](double c) { return std::exp(-3.0 * c); }, 18);
    const auto box = oracle::cell_sum(A, [](double c) { return std::exp(-3.0 * c); }, 18);
    const double v = eval_E_negative(A, 3.0);
    CHECK(v >= box.lo);
    CHECK(v <= box.hi);
    CHECK(std::abs(v - ref) <= 1e-8 * v);
}

TEST_CASE("errors") {
    const Ladder L = fixtures::classical();
    CHECK_THROWS_AS(eval_scaled_E(L, std::nan("")), DomainError);
    CHECK_THROWS_AS(eval_scaled_E(L, INFINITY), DomainError);
    CHECK_THROWS_AS(eval_scaled_E(L, -1.0), DomainError);
    CHECK_THROWS_AS(eval_E_negative(L, std::nan("")), DomainError);

    EvalConfig bad;
    bad.taylor_order = 3;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_THROWS_AS(eval_scaled_E(L, 1.0, bad), DomainError);
    bad = EvalConfig{};
    bad.base_threshold = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    CHECK_NOTHROW(EvalConfig{}.validate());
}

TEST_CASE("configuration changes agree") {
    const Ladder L = fixtures::asymmetric();
    EvalConfig small;
    small.base_threshold = 0.1;
    small.taylor_order = 12;
    for (double lambda : {0.05, 1.0, 12.0, 80.0})
        CHECK(std::abs(eval_scaled_E(L, lambda) - eval_scaled_E(L, lambda, small)) <= 1e-10 * eval_scaled_E(L, lambda));
}
