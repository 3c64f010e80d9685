#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "qdp5/threefold.hpp"

using namespace qdp5;

namespace {
ThreefoldDivisor H(std::int64_t c = 1) { return ThreefoldDivisor::pullback_hyperplane(c); }
ThreefoldDivisor P(int i, std::int64_t c = 1) { return ThreefoldDivisor::point_exceptional(i, c); }
ThreefoldDivisor L(int i, int j, std::int64_t c = 1) {
    return ThreefoldDivisor::line_exceptional(i, j, c);
}
} // namespace

TEST_CASE("rule table") {
    CHECK(triple_product(H(), H(), H()) == 1);
    CHECK(triple_product(P(1), P(1), P(1)) == 1);
    CHECK(triple_product(P(1), P(2), H()) == 0);
    CHECK(triple_product(P(1), P(1), H()) == 0);
    CHECK(triple_product(P(1), H(), H()) == 0);
    CHECK(triple_product(L(1, 2), H(), H()) == 0);
    CHECK(triple_product(L(1, 2), P(1), P(1)) == 0);
    CHECK(triple_product(L(1, 2), L(3, 4), H()) == 0);
    CHECK_THROWS_AS(triple_product(L(1, 2), L(1, 2), H()), std::domain_error);
    CHECK_THROWS_AS(ThreefoldDivisor::point_exceptional(6), std::domain_error);
    CHECK_THROWS_AS(ThreefoldDivisor::line_exceptional(1, 1), std::domain_error);
}

TEST_CASE("plane through one blown-up point") {
    ThreefoldDivisor plane = H() - P(1);
    CHECK(triple_product(plane, plane, plane) == 0);
}

TEST_CASE("symmetry and trilinearity") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::int64_t> coeff(-2, 2);
    auto random_divisor = [&] {
        // Stay inside the supported rules: no line-type symbols needed,
        // they vanish against everything except their own powers.
        ThreefoldDivisor d = H(coeff(rng));
        for (int i = 1; i <= 5; ++i) d = d + P(i, coeff(rng));
        return d;
    };
    for (int trial = 0; trial < 100; ++trial) {
        ThreefoldDivisor a = random_divisor(), b = random_divisor(), c = random_divisor();
        std::int64_t base = triple_product(a, b, c);
        CHECK(triple_product(b, a, c) == base);
        CHECK(triple_product(c, b, a) == base);
        ThreefoldDivisor d = random_divisor();
        CHECK(triple_product(a + d, b, c) == base + triple_product(d, b, c));
        std::int64_t s = coeff(rng);
        CHECK(triple_product(s * a, b, c) == s * base);
    }
}

TEST_CASE("cord anticanonical degrees") {
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) CHECK(cord_anticanonical_degree(a, b) == 0);
    CHECK_THROWS_AS(cord_anticanonical_degree(2, 2), std::domain_error);
}

TEST_CASE("anticanonical class pairs as printed") {
    // -K.pi.rho with pi, rho planes through the cord's two points:
    // 4 - 2 - 2 = 0, with the line-type symbols annihilating.
    ThreefoldDivisor plane = H() - P(1) - P(2);
    CHECK(triple_product(H(4), plane, plane) == 4);
    CHECK(triple_product(P(1, 2), plane, plane) == 2);
    CHECK(triple_product(P(2, 2), plane, plane) == 2);
    CHECK(triple_product(L(1, 2, 2), plane, plane) == 0);
}

TEST_CASE("exceptional fiber invariants") {
    CHECK(exceptional_fiber_invariant(1) == -1);
    CHECK(exceptional_fiber_invariant(2) == 0);
    CHECK(exceptional_fiber_invariant(7) == 0);
    CHECK_THROWS_AS(exceptional_fiber_invariant(0), std::domain_error);
}
