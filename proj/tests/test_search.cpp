#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>

#include "s2s5/search.hpp"
#include "s2s5/sixfold.hpp"

using namespace s2s5;

namespace {

std::vector<std::vector<Int>> param_set(const std::vector<Witness>& ws) {
    std::vector<std::vector<Int>> out;
    out.reserve(ws.size());
    for (const Witness& w : ws)
        out.push_back(w.params);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("pruned enumerator equals the naive scan on small boxes") {
    for (long long b = 1; b <= 3; ++b) {
        for (Family fam : {Family::Plumbing, Family::Cp2}) {
            SearchBox box{b, b, fam};
            auto pruned = enumerate_witnesses(box);
            auto naive = enumerate_witnesses_naive(box);
            REQUIRE(pruned.size() == naive.size());
            CHECK(param_set(pruned) == param_set(naive));
        }
    }
    CHECK_THROWS_AS(enumerate_witnesses_naive(SearchBox{1, 1, Family::DirectNonspin}),
                    std::invalid_argument);
}

TEST_CASE("enumeration examples") {
    // the mu = 0 branch emits (alpha, +-1, 0) for every alpha in range
    auto cp2 = enumerate_witnesses(SearchBox{5, 5, Family::Cp2});
    for (long long a = -5; a <= 5; ++a) {
        CHECK(std::any_of(cp2.begin(), cp2.end(), [&](const Witness& w) {
            return w.params == std::vector<Int>{a, 1, 0};
        }));
    }
    // (alpha, lambda, mu) = (333, 73, -4) appears once lambda is in range
    auto big = enumerate_witnesses(SearchBox{400, 80, Family::Cp2});
    CHECK(std::any_of(big.begin(), big.end(), [](const Witness& w) {
        return w.params == std::vector<Int>{333, 73, -4};
    }));

    auto pl = enumerate_witnesses(SearchBox{1, 1, Family::Plumbing});
    CHECK(std::any_of(pl.begin(), pl.end(), [](const Witness& w) {
        return w.params == std::vector<Int>{0, -1, -1, 0, -1};
    }));
}

TEST_CASE("every emitted witness revalidates") {
    for (Family fam : {Family::Plumbing, Family::Cp2}) {
        auto ws = enumerate_witnesses(SearchBox{4, 4, fam});
        CHECK(!ws.empty());
        CHECK(std::is_sorted(ws.begin(), ws.end(),
                             [](const Witness& a, const Witness& b) { return a.before(b); }));
        for (const Witness& w : ws) {
            SystemOfInvariants sys =
                fam == Family::Plumbing
                    ? system_from_plumbing(w.params[0], w.params[1], w.params[2])
                    : system_from_cp2_bundle(w.params[0], 0);
            EulerClass e = fam == Family::Plumbing
                               ? EulerClass{w.params[3], w.params[4]}
                               : EulerClass{w.params[1], w.params[2]};
            CHECK(orbit_space_admissible(sys, e));
            CHECK(det_at_euler(sys, e) == w.cd.det);
            CHECK(s_invariants(w.cd) == w.inv);
            CHECK(value_set_check(w.inv, w.cd.spin, w.cd.det));
        }
    }
}

TEST_CASE("coverage is deterministic in the worker count") {
    std::set<DiffeoClass> targets;
    for (int i = 0; i < 28; ++i)
        for (int j = 0; j < 12; ++j)
            for (int k = 0; k < 2; ++k)
                targets.insert({i, j, k});
    SearchBox box{12, 8, Family::Plumbing};
#ifdef _OPENMP
    int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    CoverageReport serial = coverage(box, targets);
    omp_set_num_threads(std::max(saved, 4));
    CoverageReport parallel = coverage(box, targets);
    omp_set_num_threads(saved);
#else
    CoverageReport serial = coverage(box, targets);
    CoverageReport parallel = coverage(box, targets);
#endif
    CHECK(serial.unhit == parallel.unhit);
    REQUIRE(serial.first_witness.size() == parallel.first_witness.size());
    for (const auto& [c, w] : serial.first_witness) {
        REQUIRE(parallel.first_witness.contains(c));
        CHECK(parallel.first_witness.at(c).params == w.params);
    }
}

TEST_CASE("coverage examples") {
    CHECK(coverage(SearchBox{3, 3, Family::Plumbing}, {}).first_witness.empty());

    // non-spin s1 has even numerator over 28: (1,1,0) is never hit
    CoverageReport r = coverage(SearchBox{40, 20, Family::Cp2}, {DiffeoClass{1, 1, 0}});
    CHECK(r.first_witness.empty());
    CHECK(r.unhit == std::set<DiffeoClass>{DiffeoClass{1, 1, 0}});
}

TEST_CASE("realize_target: examples and error taxonomy") {
    Witness w0 = realize_target({0, 0, 0});
    CHECK(w0.triple() == DiffeoClass{0, 0, 0});
    CHECK(w0.family == Family::Plumbing);

    Witness wd = realize_target({4, 2, 0});
    CHECK(wd.family == Family::DirectNonspin);
    CHECK(wd.triple() == DiffeoClass{4, 2, 0});
    CHECK(wd.cd.B == 1);
    CHECK(wd.cd.C == 0);
    CHECK(wd.cd.D == 1);
    CHECK(wd.cd.v == 0);

    CHECK_THROWS_AS(realize_target({0, 1, 0}), NoActionError);
    CHECK_THROWS_AS(realize_target({25, 3, 1}, /*budget=*/10), BudgetExhaustedError);
}
