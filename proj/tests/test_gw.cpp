#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "qdp5/gw.hpp"

using namespace qdp5;

TEST_CASE("literal 1-point case table") {
    CHECK(one_point_literal(exceptional(1), Insertion::divisor(exceptional(1))) == Rational(-1));
    CHECK(one_point_literal(exceptional(1), Insertion::divisor(exceptional(2))) == Rational(0));
    CHECK(one_point_literal(line_class(1, 2), Insertion::divisor(hyperplane())) == Rational(1));
    CHECK(one_point_literal(line_class(1, 2), Insertion::divisor(exceptional(1))) == Rational(1));
    CHECK(one_point_literal(line_class(1, 2), Insertion::divisor(exceptional(3))) == Rational(0));
    CHECK(one_point_literal(hyperplane(), Insertion::point()) == Rational(1));
    CHECK(one_point_literal(h_minus(0xF, 2), Insertion::point()) == Rational(1));
    CHECK(one_point_literal(exceptional(2), Insertion::point()) == Rational(0));
    CHECK(one_point_literal(hyperplane(), Insertion::fundamental()) == Rational(0));
    CHECK_THROWS_AS(one_point_literal(-hyperplane(), Insertion::point()), std::domain_error);
}

TEST_CASE("literal support is exactly E_i, H-sum, 2H-sum") {
    std::set<SurfaceClass> expected;
    for (int i = 1; i <= 4; ++i) expected.insert(exceptional(i));
    for (std::int64_t h : {1, 2})
        for (unsigned mask = 0; mask < 16; ++mask) expected.insert(h_minus(mask, h));
    std::vector<Insertion> probes = {Insertion::point()};
    probes.push_back(Insertion::divisor(hyperplane()));
    for (int i = 1; i <= 4; ++i) probes.push_back(Insertion::divisor(exceptional(i)));
    std::set<SurfaceClass> support;
    for (std::int64_t deg = 0; deg <= 6; ++deg)
        for (const SurfaceClass& beta : classes_of_anticanonical_degree(deg)) {
            if (beta.is_zero()) continue;
            for (const Insertion& t : probes)
                if (!one_point_literal(beta, t).is_zero()) support.insert(beta);
        }
    for (const SurfaceClass& beta : support) CHECK(expected.count(beta) == 1);
    // Every effective member of the expected list really appears.
    for (const SurfaceClass& beta : expected)
        if (is_effective(beta)) CHECK(support.count(beta) == 1);
}

TEST_CASE("base_count table") {
    CHECK(base_count(exceptional(1), 0) == Rational(1));
    CHECK(base_count(line_class(2, 4), 0) == Rational(1));
    CHECK(base_count(hyperplane() - exceptional(1), 1) == Rational(1));
    CHECK(base_count(h_minus(0xF, 2), 1) == Rational(1));
    CHECK(base_count(exceptional(1) + exceptional(2), 1) == Rational(0));
    CHECK(base_count(std::int64_t(2) * exceptional(1), 1) == Rational(0));
    CHECK(base_count(hyperplane(), 2) == Rational(1));
    CHECK(base_count(h_minus(0x7, 2), 2) == Rational(1));
    CHECK(base_count(h_minus(0x3, 2), 3) == Rational(1));
    CHECK(base_count(SurfaceClass{3, {2, 1, 1, 1}}, 3) == Rational(1));
    // Mixed-sign classes count 0.
    CHECK(base_count(hyperplane() - exceptional(1) - exceptional(2) + exceptional(3), 1) ==
          Rational(0));
    CHECK_THROWS_AS(base_count(hyperplane(), 1), std::invalid_argument);
    CHECK_THROWS_AS(base_count(-hyperplane(), 0), std::domain_error);
}

TEST_CASE("three_point examples") {
    SurfaceClass line12 = line_class(1, 2);
    CHECK(three_point(Mode::Strict, line12, Insertion::divisor(exceptional(1)),
                      Insertion::divisor(exceptional(2)),
                      Insertion::divisor(hyperplane())) == Rational(1));
    CHECK(three_point(Mode::Strict, hyperplane(), Insertion::fundamental(), Insertion::point(),
                      Insertion::point()) == Rational(0));
    CHECK(three_point(Mode::Literal, hyperplane(), Insertion::fundamental(), Insertion::point(),
                      Insertion::divisor(hyperplane())) == Rational(0));
    CHECK(three_point(Mode::Strict, h_minus(0xF, 2), Insertion::point(),
                      Insertion::divisor(exceptional(1)),
                      Insertion::divisor(exceptional(2))) == Rational(1));
    // Dimension filter: two points against a degree-1 class vanish.
    CHECK(three_point(Mode::Strict, line12, Insertion::point(), Insertion::point(),
                      Insertion::divisor(hyperplane())) == Rational(0));
    CHECK_THROWS_AS(three_point(Mode::Literal, h_minus(0xF, 2), Insertion::point(),
                                Insertion::point(), Insertion::divisor(exceptional(1))),
                    std::domain_error);
    CHECK_THROWS_AS(three_point(Mode::Strict, SurfaceClass{}, Insertion::point(),
                                Insertion::point(), Insertion::point()),
                    std::domain_error);
}

TEST_CASE("divisor stripping is order independent") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<std::int64_t> coeff(-2, 2);
    std::vector<SurfaceClass> betas;
    for (std::int64_t deg = 1; deg <= 4; ++deg)
        for (const SurfaceClass& beta : classes_of_anticanonical_degree(deg)) betas.push_back(beta);
    std::uniform_int_distribution<size_t> pick_beta(0, betas.size() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        SurfaceClass beta = betas[pick_beta(rng)];
        std::vector<Insertion> ins;
        int points = std::uniform_int_distribution<int>(0, 2)(rng);
        for (int k = 0; k < points; ++k) ins.push_back(Insertion::point());
        while (ins.size() < 3) {
            SurfaceClass d{coeff(rng), {coeff(rng), coeff(rng), coeff(rng), coeff(rng)}};
            ins.push_back(Insertion::divisor(d));
        }
        Rational base = three_point(Mode::Strict, beta, ins[0], ins[1], ins[2]);
        std::shuffle(ins.begin(), ins.end(), rng);
        CHECK(three_point(Mode::Strict, beta, ins[0], ins[1], ins[2]) == base);
    }
}

TEST_CASE("strict support stays within degree 4 table") {
    for (std::int64_t deg = 1; deg <= 4; ++deg)
        for (const SurfaceClass& beta : classes_of_anticanonical_degree(deg)) {
            Rational n = base_count(beta, deg - 1);
            CHECK((n == Rational(0) || n == Rational(1)));
        }
}
