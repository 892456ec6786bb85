#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "s2s5/family.hpp"

using namespace s2s5;

namespace {

Witness base_plumbing(const std::vector<Int>& p) {
    Witness w;
    w.family = Family::Plumbing;
    w.params = p;
    w.cd = chardata_plumbing(p[0], p[1], p[2], p[3], p[4]);
    w.inv = s_invariants(w.cd);
    return w;
}

Witness base_cp2(const std::vector<Int>& p) {
    Witness w;
    w.family = Family::Cp2;
    w.params = p;
    w.cd = chardata_cp2(p[0], p[1], p[2]);
    w.inv = s_invariants(w.cd);
    return w;
}

}  // namespace

TEST_CASE("default modulus") {
    CHECK(default_modulus() == 1344);
    CHECK(default_modulus() % 2 == 0);
    for (long long d : {224, 24, 2, 6, 4, 12})
        CHECK(default_modulus() % d == 0);
}

TEST_CASE("m = 0 reproduces the base; worked cp2 member") {
    FamilySpec pl{base_plumbing({19, 13, -4, 1, -7}), default_modulus()};
    CHECK(family_plumbing(pl, 0) == pl.base.params);

    FamilySpec cp{base_cp2({333, 73, -4}), 24};
    CHECK(family_cp2(cp, 0) == cp.base.params);
    CHECK(family_cp2(cp, 1) == std::vector<Int>{13053, 457, -4});
    CHECK(Int(16) * 13053 - Int(457) * 457 == -1);
}

TEST_CASE("generating identities hold for arbitrary Diophantine values") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long long> d(-25, 25);
    int nondegenerate = 0;
    for (int n = 0; n < 400; ++n) {
        std::vector<Int> p{d(rng), d(rng), d(rng), d(rng), d(rng)};
        if (p[3] == 0 && p[4] == 0)
            continue;
        Int S = plumbing_diophantine(p);
        Int T = 1344;
        FamilyBranch branch;
        for (Int m : {Int(-3), Int(1), Int(2), Int(7)}) {
            std::vector<Int> q = family_plumbing_step(p, m, T, &branch);
            CHECK(plumbing_diophantine(q) == S);
            CHECK(q[3] == p[3]);
            CHECK(q[4] == p[4]);
            for (int j = 0; j < 3; ++j)
                CHECK((q[j] - p[j]) % T == 0);
        }
        if (branch == FamilyBranch::Generic)
            ++nondegenerate;

        // cp2 identity: mu^2 alpha - lambda^2 is preserved for any value
        std::vector<Int> c{d(rng), d(rng), d(rng)};
        Int Sc = c[2] * c[2] * c[0] - c[1] * c[1];
        for (Int m : {Int(-2), Int(1), Int(5)}) {
            std::vector<Int> q = family_cp2_step(c, m, T);
            CHECK(q[2] * q[2] * q[0] - q[1] * q[1] == Sc);
        }
    }
    CHECK(nondegenerate > 200);
}

TEST_CASE("non-degenerate members are injective in m") {
    FamilySpec pl{base_plumbing({19, 13, -4, 1, -7}), default_modulus()};
    FamilySpec cp{base_cp2({333, 73, -4}), default_modulus()};
    std::set<std::vector<Int>> seen_pl, seen_cp;
    for (Int m = 0; m <= 20; ++m) {
        seen_pl.insert(family_plumbing(pl, m));
        seen_cp.insert(family_cp2(cp, m));
    }
    CHECK(seen_pl.size() == 21);
    CHECK(seen_cp.size() == 21);
}

TEST_CASE("degenerate branches vary exactly the free coordinate") {
    // lambda + mu = 0: the third coordinate is free
    FamilySpec spec{base_plumbing({-1, -1, 3, 1, -1}), default_modulus()};
    FamilyBranch branch;
    std::vector<Int> q = family_plumbing_step(spec.base.params, 2, spec.modulus, &branch);
    CHECK(branch == FamilyBranch::FreeAlpha3);
    CHECK(q == std::vector<Int>{-1, -1, 3 + 2 * 1344, 1, -1});
    // invariants constant because the modulus is even
    CHECK(s_invariants(chardata_plumbing(q[0], q[1], q[2], q[3], q[4])) == spec.base.inv);

    // mu = 0 on the cp2 side: alpha free, all members are (0,0,0)
    FamilySpec cp{base_cp2({7, 1, 0}), default_modulus()};
    std::vector<Int> qc = family_cp2_step(cp.base.params, 3, cp.modulus, &branch);
    CHECK(branch == FamilyBranch::FreeAlpha);
    CHECK(qc == std::vector<Int>{7 + 3 * 1344, 1, 0});
    CHECK(s_invariants(chardata_cp2(qc[0], qc[1], qc[2])) == cp.base.inv);
}

TEST_CASE("certification: count 10 on golden bases") {
    for (const auto& p : std::vector<std::vector<Int>>{
             {19, 13, -4, 1, -7},
             {0, -1, -1, 0, -1},
             {-1, -1, 3, 1, -1},
             {23, 5, -72, 1, -5},
             {23, 2, 5, 1, -6}}) {
        FamilySpec spec{base_plumbing(p), default_modulus()};
        CertificationReport rep = certify_family(spec, 10);
        INFO("plumbing base ", p[0], ",", p[1], ",", p[2], ",", p[3], ",", p[4]);
        for (const auto& f : rep.failures)
            INFO(f);
        CHECK(rep.ok);
        CHECK(rep.members.size() == 10);
    }
    for (const auto& p : std::vector<std::vector<Int>>{
             {333, 73, -4}, {0, 1, 0}, {2, 3, -2}, {12, 7, -2}, {30, 11, 2}}) {
        FamilySpec spec{base_cp2(p), default_modulus()};
        CertificationReport rep = certify_family(spec, 10);
        INFO("cp2 base ", p[0], ",", p[1], ",", p[2]);
        CHECK(rep.ok);
        CHECK(rep.members.size() == 10);
    }
    CHECK(certify_family(FamilySpec{base_cp2({0, 1, 0}), default_modulus()}, 1).ok);
}
