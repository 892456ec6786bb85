#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "s2s5/rational.hpp"

using namespace s2s5;

TEST_CASE("residue classes are canonical representatives in [0,1)") {
    CHECK(qz_normalize(3, 6) == ResidueClass(1, 2));
    CHECK(qz_normalize(-1, 4) == ResidueClass(3, 4));
    CHECK(qz_normalize(1, -4) == ResidueClass(3, 4));
    CHECK(qz_normalize(7, 7) == ResidueClass(0, 1));
    CHECK(qz_normalize(0, 5).is_zero());
    CHECK(qz_normalize(225, 224) == ResidueClass(1, 224));
    CHECK_THROWS_AS(qz_normalize(1, 0), std::invalid_argument);
}

TEST_CASE("residue arithmetic works mod 1") {
    ResidueClass half(1, 2), third(1, 3);
    CHECK(half + half == ResidueClass(0, 1));
    CHECK(half + third == ResidueClass(5, 6));
    CHECK(-third == ResidueClass(2, 3));
    CHECK(-ResidueClass(0, 1) == ResidueClass(0, 1));
    CHECK(third.add_scaled(ResidueClass(1, 28), 29) == ResidueClass(1, 3) + ResidueClass(1, 28));
    CHECK(ResidueClass(3, 28).str() == "3/28");
}

TEST_CASE("canonical Bezout pairs: identity, positivity, minimality") {
    CHECK_THROWS_AS(ext_gcd(0, 0), std::invalid_argument);

    std::mt19937_64 rng(20260826);
    std::uniform_int_distribution<long long> d(-1000, 1000);
    int tested = 0;
    while (tested < 500) {
        Int lam = d(rng), mu = d(rng);
        if (lam == 0 && mu == 0)
            continue;
        ++tested;
        BezoutPair b = ext_gcd(lam, mu);
        CHECK(b.g > 0);
        CHECK(b.g == gcd(lam, mu));
        CHECK(b.s * lam + b.t * mu == b.g);
        // minimal |s| among s + k*(mu/g), ties broken toward s >= 0
        Int step = mu / b.g;
        if (step != 0) {
            for (Int k : {Int(-1), Int(1)}) {
                Int other = b.s + k * step;
                bool strictly_smaller = abs(b.s) < abs(other);
                bool tie_kept_nonneg = abs(b.s) == abs(other) && b.s >= 0;
                CHECK((strictly_smaller || tie_kept_nonneg));
            }
        }
    }
}

TEST_CASE("Bezout edge cases") {
    BezoutPair a = ext_gcd(0, 5);
    CHECK(a.g == 5);
    CHECK(a.s == 0);
    CHECK(a.t == 1);
    BezoutPair b = ext_gcd(-7, 0);
    CHECK(b.g == 7);
    CHECK(b.s == -1);
    CHECK(b.t == 0);
    BezoutPair c = ext_gcd(1, -7);
    CHECK(c.s * 1 + c.t * -7 == 1);
    CHECK(abs(c.s) * 2 <= 7);
}
