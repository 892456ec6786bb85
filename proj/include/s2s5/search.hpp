#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "s2s5/census.hpp"
#include "s2s5/chardata.hpp"

namespace s2s5 {

enum class Family { Plumbing, Cp2, DirectNonspin };

struct SearchBox {
    long long alpha_bound = 1;  // max |alpha_i| (plumbing) or |alpha| (cp2)
    long long euler_bound = 1;  // max |lambda|, |mu|
    Family family = Family::Plumbing;
};

// One admissible (parameters, Euler class) pair together with its derived
// characteristic data and s-invariants.
struct Witness {
    Family family = Family::Plumbing;
    // (a1,a2,a3,lambda,mu), (alpha,lambda,mu) or (A,B,C,D,u,v)
    std::vector<Int> params;
    CharData cd;
    SInvariants inv;

    DiffeoClass triple() const { return class_of(inv); }
    // canonical order: (|alpha|-sum, parameter tuple), lexicographic
    std::vector<Int> canonical_key() const;
    bool before(const Witness& o) const { return canonical_key() < o.canonical_key(); }
};

// Visits every admissible witness in the box exactly once, in no
// particular order; parallelized over parameter subranges with OpenMP.
void for_each_witness(const SearchBox& box, const std::function<void(const Witness&)>& fn);

// All witnesses in the box, sorted in canonical order.
// The pruned enumerator: plumbing solves the det = +-1 constraint for
// alpha2 given (lambda, mu, alpha1, alpha3); cp2 derives
// alpha = (lambda^2 - 1) / mu^2 from (lambda odd, mu even).
std::vector<Witness> enumerate_witnesses(const SearchBox& box);

// Serial reference: blind scan over the full parameter box. Kept for the
// small-box equivalence tests and the benchmark; do not use beyond
// bounds of a few units.
std::vector<Witness> enumerate_witnesses_naive(const SearchBox& box);

struct CoverageReport {
    std::map<DiffeoClass, Witness> first_witness;
    std::set<DiffeoClass> unhit;
};

// First witness (canonical order) per target triple; deterministic
// regardless of worker count.
CoverageReport coverage(const SearchBox& box, const std::set<DiffeoClass>& targets);

struct NoActionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct BudgetExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Smallest witness realizing the target triple. Spin-quotient triples are
// searched in the plumbing family over growing boxes; the non-spin-only
// triples (i = 0 mod 4, j = 2 mod 4, k = 0) use the direct construction
// B = 1, C = 0, D = 1, v = 0 scanning A = 2 mod 4 and odd u; the
// remaining non-spin-only triples (i = 2 mod 4) come from the cp2 family.
// Throws NoActionError for unrealizable triples, BudgetExhaustedError
// when `budget` enumeration steps were spent without a hit.
Witness realize_target(const DiffeoClass& target, long long budget = 20'000'000'000);

}  // namespace s2s5
