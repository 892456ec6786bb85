#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "s2s5/sixfold.hpp"

using namespace s2s5;

TEST_CASE("plumbing systems carry the expected cup and Pontryagin forms") {
    SystemOfInvariants sys = system_from_plumbing(2, 3, 5);
    CHECK(sys.rank == 2);
    CHECK(sys.spin());
    CHECK(sys.mu_eval({1, 0}, {1, 0}, {1, 0}) == 2 - 5);
    CHECK(sys.mu_eval({1, 0}, {1, 0}, {0, 1}) == -5);
    CHECK(sys.mu_eval({1, 0}, {0, 1}, {0, 1}) == -5);
    CHECK(sys.mu_eval({0, 1}, {0, 1}, {0, 1}) == 3 - 5);
    CHECK(sys.p1_eval({1, 0}) == 4 * (2 - 5));
    CHECK(sys.p1_eval({0, 1}) == 4 * (3 - 5));
    CHECK(sys.half_b3 == 0);
}

TEST_CASE("cp2 bundle systems: w2 tracks the bundle parity") {
    SystemOfInvariants flat = system_from_cp2_bundle(4, 0);
    CHECK_FALSE(flat.spin());
    CHECK(flat.mu_eval({1, 0}, {1, 0}, {1, 0}) == 0);
    CHECK(flat.mu_eval({1, 0}, {1, 0}, {0, 1}) == 1);
    CHECK(flat.mu_eval({0, 1}, {0, 1}, {0, 1}) == 4);
    CHECK(flat.p1_eval({0, 1}) == 4 * 4 + 3);

    SystemOfInvariants twisted = system_from_cp2_bundle(4, 1);
    CHECK(twisted.spin());
    CHECK(twisted.mu_eval({0, 1}, {0, 1}, {0, 1}) == 5);
}

TEST_CASE("trilinear evaluation is symmetric and multilinear") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(-9, 9);
    for (int n = 0; n < 200; ++n) {
        SystemOfInvariants sys = system_from_plumbing(d(rng), d(rng), d(rng));
        std::array<Int, 2> x{d(rng), d(rng)}, y{d(rng), d(rng)}, z{d(rng), d(rng)};
        CHECK(sys.mu_eval(x, y, z) == sys.mu_eval(y, x, z));
        CHECK(sys.mu_eval(x, y, z) == sys.mu_eval(z, y, x));
        std::array<Int, 2> xs{2 * x[0], 2 * x[1]};
        CHECK(sys.mu_eval(xs, y, z) == 2 * sys.mu_eval(x, y, z));
    }
}

TEST_CASE("det at the Euler class matches the closed form") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> d(-9, 9);
    for (int n = 0; n < 200; ++n) {
        Int a1 = d(rng), a2 = d(rng), a3 = d(rng), lam = d(rng), mu = d(rng);
        SystemOfInvariants sys = system_from_plumbing(a1, a2, a3);
        Int expect = lam * mu * a1 * a2 - lam * (lam + mu) * a1 * a3 -
                     mu * (lam + mu) * a2 * a3;
        CHECK(det_at_euler(sys, EulerClass{lam, mu}) == expect);

        Int alpha = d(rng);
        SystemOfInvariants cp2 = system_from_cp2_bundle(alpha, 0);
        CHECK(det_at_euler(cp2, EulerClass{lam, mu}) == mu * mu * alpha - lam * lam);
    }
}

TEST_CASE("admissibility: primitivity, det, and the non-spin parity tie") {
    SystemOfInvariants pl = system_from_plumbing(0, -1, -1);
    CHECK(orbit_space_admissible(pl, EulerClass{0, -1}));
    CHECK_FALSE(orbit_space_admissible(pl, EulerClass{0, -2}));  // imprimitive

    SystemOfInvariants cp2 = system_from_cp2_bundle(0, 0);
    CHECK(orbit_space_admissible(cp2, EulerClass{1, 0}));
    // non-spin orbit spaces require e = w2 mod 2: lambda must be odd
    CHECK_FALSE(orbit_space_admissible(cp2, EulerClass{0, 1}));
    // det = +1 is never admissible over a non-spin base
    CHECK(det_at_euler(system_from_cp2_bundle(2, 0), EulerClass{1, 1}) == 1);
    CHECK_FALSE(orbit_space_admissible(system_from_cp2_bundle(2, 0), EulerClass{1, 1}));
}

TEST_CASE("realizability holds for every constructed system") {
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<long long> d(-20, 20);
    for (int n = 0; n < 200; ++n) {
        CHECK(check_realizability(system_from_plumbing(d(rng), d(rng), d(rng))));
        CHECK(check_realizability(system_from_cp2_bundle(d(rng), 0)));
        CHECK(check_realizability(system_from_cp2_bundle(d(rng), 1)));
    }
}

TEST_CASE("bundle twist -1 is constructible even though its published "
          "coefficient table fails the Wall congruence") {
    // The beta = -1 column gives mu(e2,e2,e2) = alpha - 1 while
    // p1(e2) = 4 alpha + 2, so 4 mu(e2,e2,e2) - p1(e2) = -6 mod 24 != 0.
    // Only beta in {0, 1} is needed anywhere downstream; we keep the
    // constructor faithful to the table and exclude -1 from the
    // realizability property above.
    std::mt19937_64 rng(29);
    std::uniform_int_distribution<long long> d(-20, 20);
    for (int n = 0; n < 50; ++n) {
        long long alpha = d(rng);
        SystemOfInvariants sys = system_from_cp2_bundle(alpha, -1);
        CHECK(sys.mu[3] == alpha - 1);
        CHECK(sys.p1[1] == 4 * alpha + 2);
        CHECK_FALSE(check_realizability(sys));
    }
}

TEST_CASE("equivalence search finds the identity and respects w2") {
    SystemOfInvariants a = system_from_plumbing(2, 3, 5);
    auto phi = equivalence_search(a, a, 1);
    REQUIRE(phi.has_value());

    // spin vs non-spin systems are never equivalent
    CHECK_FALSE(equivalence_search(a, system_from_cp2_bundle(2, 0), 3).has_value());
}

TEST_CASE("operations reject unsupported ranks") {
    SystemOfInvariants bad;
    bad.rank = 3;
    CHECK_THROWS_AS(bad.mu_eval({1, 0}, {1, 0}, {1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(det_at_euler(bad, EulerClass{1, 0}), std::invalid_argument);
}
