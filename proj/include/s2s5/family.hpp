#pragma once

#include <string>
#include <vector>

#include "s2s5/search.hpp"

namespace s2s5 {

// Which branch of the congruence-family construction applies to a base
// witness: the generic solution-shifting identity, or one of the
// degenerate branches where a parameter drops out of the Diophantine
// equation and can be varied freely.
enum class FamilyBranch {
    Generic,
    FreeAlpha1,  // lambda = 0
    FreeAlpha2,  // mu = 0, or lambda*a1 = (lambda+mu)*a3 = 0
    FreeAlpha3,  // lambda + mu = 0
    FreeAlpha,   // cp2 with mu = 0
};

struct FamilySpec {
    Witness base;
    Int modulus;  // positive multiple of the family constant
};

// 2 * lcm of every denominator appearing in the composed invariant
// formulas; any positive multiple keeps all three invariants constant
// along the family.
Int default_modulus();

// Value of the Diophantine form lam*mu*a1*a2 - lam*(lam+mu)*a1*a3 -
// mu*(lam+mu)*a2*a3 at (a1,a2,a3,lam,mu).
Int plumbing_diophantine(const std::vector<Int>& params);

// Raw congruence steps without the det = +-1 restriction: the generating
// identities preserve the Diophantine value S for any S, which is what
// the property suite checks directly.
std::vector<Int> family_plumbing_step(const std::vector<Int>& params, const Int& m,
                                      const Int& T, FamilyBranch* branch_out = nullptr);
std::vector<Int> family_cp2_step(const std::vector<Int>& params, const Int& m,
                                 const Int& T, FamilyBranch* branch_out = nullptr);

// m-th member of the plumbing congruence family through spec.base:
// parameters (a1, a2, a3, lambda, mu) congruent to the base mod T with
// the same Diophantine value. branch_out, when non-null, receives the
// dispatched branch.
std::vector<Int> family_plumbing(const FamilySpec& spec, const Int& m,
                                 FamilyBranch* branch_out = nullptr);

// m-th member of the cp2 congruence family: (lambda + mu^2 m T, mu,
// alpha + (2 lambda + mu^2 m T) m T), or the mu = 0 branch varying alpha.
std::vector<Int> family_cp2(const FamilySpec& spec, const Int& m,
                            FamilyBranch* branch_out = nullptr);

struct CertifiedMember {
    Int m;
    std::vector<Int> params;
    DiffeoClass triple;
};

struct CertificationReport {
    bool ok = false;
    FamilyBranch branch = FamilyBranch::Generic;
    std::vector<CertifiedMember> members;
    std::vector<std::string> failures;
    // inequivalence of the base 6-manifolds is an oracle statement:
    // distinct parameter classes plus no basis change found within bound
    long long equivalence_bound = 3;
};

// Generates members m = 0 .. count-1 and verifies: det condition,
// constant s-invariants, congruence mod T, pairwise distinct parameter
// classes (triples up to permutation and global sign; alpha up to sign),
// and absence of an equivalence within equivalence_bound.
CertificationReport certify_family(const FamilySpec& spec, int count);

}  // namespace s2s5
