#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "arrival/graphgen.hpp"
#include "arrival/resistance.hpp"
#include "testutil.hpp"

using namespace arrival;

TEST_CASE("spreading resistance: paths, parallel pair, triangle, C4") {
    CHECK(spreading_resistance_st(make_path(5, Rational(1, 2)), 0, 5) == 5);
    CHECK(spreading_resistance_st(make_parallel_edges(2, Rational(1, 2)), 0, 1) == Rational(1, 2));
    CHECK(spreading_resistance_st(make_complete(3, Rational(1, 2)), 0, 1) == Rational(3, 4));
    // opposite corners of the 4-cycle
    CHECK(spreading_resistance_st(make_cycle(4, Rational(1, 2)), 0, 2) == Rational(5, 4));
}

TEST_CASE("spreading resistance does not depend on the uniform probability") {
    for (Rational p : {Rational(1, 4), Rational(1, 2), Rational(9, 10)}) {
        CHECK(spreading_resistance_st(make_cycle(5, p), 0, 2) ==
              spreading_resistance_st(make_cycle(5, Rational(1, 3)), 0, 2));
    }
}

TEST_CASE("spreading resistance: errors and the absorbed case") {
    std::vector<std::string> names{"a", "b", "c"};
    std::vector<Edge<Rational>> mixed{{0, 1, Rational(1, 2)}, {1, 2, Rational(1, 3)}};
    CHECK_THROWS_AS(spreading_resistance_st(MultiGraph<Rational>(names, mixed), 0, 2),
                    NonUniformProbabilities);

    std::vector<Edge<Rational>> partial{{0, 1, Rational(1, 2)}};
    CHECK_THROWS_AS(spreading_resistance_st(MultiGraph<Rational>(names, partial), 0, 2),
                    UnreachableTarget);

    auto g = make_path(3, Rational(1, 2));
    CHECK(spreading_resistance(g, VertexSet::of({0, 3}), 3) == 0);
}

TEST_CASE("resistance is symmetric in s and t") {
    Philox4x32 rng(41, 0);
    for (int trial = 0; trial < 25; ++trial) {
        auto c = testutil::random_multigraph(rng, 7, Rational(1, 2));
        CHECK(spreading_resistance_st(c.graph, c.s, c.t) ==
              spreading_resistance_st(c.graph, c.t, c.s));
    }
}

TEST_CASE("exponential expectation: closed cases") {
    Rational p(1, 2);
    CHECK(exponential_expectation(make_path(4, p), VertexSet::single(0), 4, Rational(1, 4)) == 16);
    CHECK(exponential_expectation(make_complete(3, p), VertexSet::single(0), 1, p) ==
          Rational(3, 2));
    auto g = make_path(2, p);
    CHECK(exponential_expectation(g, VertexSet::of({0, 2}), 2, p) == 0);
    CHECK_THROWS_AS(exponential_expectation(g, VertexSet::single(0), 2, Rational(0)), DomainError);
}

TEST_CASE("tau times p equals the resistance, exactly") {
    Philox4x32 rng(42, 0);
    for (int trial = 0; trial < 25; ++trial) {
        auto c = testutil::random_multigraph(rng, 6, Rational(2, 3));
        for (Rational p : {Rational(1, 5), Rational(1, 2), Rational(7, 8)}) {
            Rational tau = exponential_expectation(c.graph, VertexSet::single(c.s), c.t, p);
            CHECK(tau * p == spreading_resistance_st(c.graph, c.s, c.t));
        }
    }
}

TEST_CASE("limit check: (1-q) T at q = 1-eps sits next to rho") {
    auto p2 = resistance_limit_check(make_path(2, Rational(1, 2)), 0, 2, Rational(1, 10000));
    CHECK(p2.first == 2);  // exact on paths at every q
    CHECK(p2.second == 2);

    auto k3 = resistance_limit_check(make_complete(3, Rational(1, 2)), 0, 1, Rational(1, 10000));
    CHECK(k3.second == Rational(3, 4));
    CHECK(std::abs(to_double(k3.first) - 0.75) <= 1e-3);
    // (1-q) T(K_3) = (1+2q)/(1+q)^2 at q = 1 - eps
    Rational q = Rational(1) - Rational(1, 10000);
    CHECK(k3.first == (1 + 2 * q) / ((1 + q) * (1 + q)));

    auto same = resistance_limit_check(make_path(2, Rational(1, 2)), 1, 1, Rational(1, 100));
    CHECK(same.first == 0);
    CHECK(same.second == 0);

    CHECK_THROWS_AS(resistance_limit_check(make_path(1, Rational(1, 2)), 0, 1, Rational(2)),
                    DomainError);
}

TEST_CASE("limit check converges on random uniform graphs") {
    Philox4x32 rng(43, 0);
    for (int trial = 0; trial < 8; ++trial) {
        auto c = testutil::random_multigraph(rng, 5, Rational(1, 2));
        auto [scaled, rho] = resistance_limit_check(c.graph, c.s, c.t, Rational(1, 10000));
        CHECK(std::abs(to_double(scaled) - to_double(rho)) <= 1e-3);
    }
}

TEST_CASE("limit gap shrinks linearly in 1-q") {
    Philox4x32 rng(44, 0);
    for (int trial = 0; trial < 6; ++trial) {
        auto c = testutil::random_multigraph(rng, 5, Rational(1, 2));
        auto coarse = resistance_limit_check(c.graph, c.s, c.t, Rational(1, 100));
        double fitted_c = std::abs(to_double(coarse.first - coarse.second)) * 100.0;
        INFO("fitted C = ", fitted_c);
        auto fine = resistance_limit_check(c.graph, c.s, c.t, Rational(1, 10000));
        double gap = std::abs(to_double(fine.first - fine.second));
        CHECK(gap <= (fitted_c + 1.0) * 1e-4);  // slack for the O(eps^2) term
    }
}
