#include "s2s5/family.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>

namespace s2s5 {

namespace {

Int lcm_int(const Int& a, const Int& b) { return a / gcd(a, b) * b; }

// canonical form of a plumbing triple under permutation and global sign
std::array<Int, 3> triple_class(const Int& a1, const Int& a2, const Int& a3) {
    std::array<Int, 3> up{a1, a2, a3};
    std::array<Int, 3> down{-a1, -a2, -a3};
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    return std::min(up, down);
}

const char* branch_name(FamilyBranch b) {
    switch (b) {
        case FamilyBranch::Generic: return "generic";
        case FamilyBranch::FreeAlpha1: return "free alpha1 (lambda = 0)";
        case FamilyBranch::FreeAlpha2: return "free alpha2";
        case FamilyBranch::FreeAlpha3: return "free alpha3 (lambda + mu = 0)";
        case FamilyBranch::FreeAlpha: return "free alpha (mu = 0)";
    }
    return "?";
}

}  // namespace

Int default_modulus() {
    Int t = 2;
    for (long long d : {224, 24, 2, 6, 4, 12})
        t = lcm_int(t, d);
    return 2 * t;  // 1344, even so the free-coordinate branches stay constant
}

Int plumbing_diophantine(const std::vector<Int>& p) {
    const Int &a1 = p[0], &a2 = p[1], &a3 = p[2], &lam = p[3], &mu = p[4];
    return lam * mu * a1 * a2 - lam * (lam + mu) * a1 * a3 - mu * (lam + mu) * a2 * a3;
}

std::vector<Int> family_plumbing_step(const std::vector<Int>& p, const Int& m,
                                      const Int& T, FamilyBranch* branch_out) {
    if (T <= 0)
        throw std::invalid_argument("modulus must be positive");
    const Int &a1 = p[0], &a2 = p[1], &a3 = p[2], &lam = p[3], &mu = p[4];

    FamilyBranch branch;
    std::vector<Int> out = p;
    Int A = lam * a1, B = mu * a2, C = (lam + mu) * a3;
    if (lam == 0) {
        branch = FamilyBranch::FreeAlpha1;
        out[0] = a1 + m * T;
    } else if (mu == 0) {
        branch = FamilyBranch::FreeAlpha2;
        out[1] = a2 + m * T;
    } else if (lam + mu == 0) {
        branch = FamilyBranch::FreeAlpha3;
        out[2] = a3 + m * T;
    } else if (A == 0 && C == 0) {
        // a1 = a3 = 0: the equation ignores a2
        branch = FamilyBranch::FreeAlpha2;
        out[1] = a2 + m * T;
    } else {
        branch = FamilyBranch::Generic;
        Int n = m * lam * mu * (lam + mu) * T;
        out[0] = a1 + m * mu * (lam + mu) * (A - C) * T;
        out[1] = a2 + m * lam * (lam + mu) * (2 * C + (n + 1) * (A - C)) * T;
        out[2] = a3 + m * lam * mu * (A - C) * T;
    }
    if (branch_out)
        *branch_out = branch;
    return out;
}

std::vector<Int> family_plumbing(const FamilySpec& spec, const Int& m,
                                 FamilyBranch* branch_out) {
    if (spec.base.family != Family::Plumbing)
        throw std::invalid_argument("base witness is not in the plumbing family");
    Int S = plumbing_diophantine(spec.base.params);
    if (S != 1 && S != -1)
        throw std::invalid_argument("base witness violates the det condition");
    return family_plumbing_step(spec.base.params, m, spec.modulus, branch_out);
}

std::vector<Int> family_cp2_step(const std::vector<Int>& p, const Int& m, const Int& T,
                                 FamilyBranch* branch_out) {
    if (T <= 0)
        throw std::invalid_argument("modulus must be positive");
    const Int &alpha = p[0], &lam = p[1], &mu = p[2];

    std::vector<Int> out = p;
    FamilyBranch branch;
    if (mu == 0) {
        branch = FamilyBranch::FreeAlpha;
        out[0] = alpha + m * T;
    } else {
        branch = FamilyBranch::Generic;
        out[0] = alpha + (2 * lam + mu * mu * m * T) * m * T;
        out[1] = lam + mu * mu * m * T;
    }
    if (branch_out)
        *branch_out = branch;
    return out;
}

std::vector<Int> family_cp2(const FamilySpec& spec, const Int& m, FamilyBranch* branch_out) {
    if (spec.base.family != Family::Cp2)
        throw std::invalid_argument("base witness is not in the cp2 family");
    const std::vector<Int>& p = spec.base.params;
    if (p[2] * p[2] * p[0] - p[1] * p[1] != -1)
        throw std::invalid_argument("base witness violates the det condition");
    return family_cp2_step(p, m, spec.modulus, branch_out);
}

CertificationReport certify_family(const FamilySpec& spec, int count) {
    if (count < 1)
        throw std::invalid_argument("count must be >= 1");
    CertificationReport rep;
    const bool plumbing = spec.base.family == Family::Plumbing;
    if (!plumbing && spec.base.family != Family::Cp2)
        throw std::invalid_argument("certification covers the bundle families only");
    const Int& T = spec.modulus;

    std::vector<SystemOfInvariants> systems;
    std::vector<std::array<Int, 3>> classes;  // triple_class, or (|alpha|,0,0)
    SInvariants base_inv = spec.base.inv;

    for (int m = 0; m < count; ++m) {
        FamilyBranch branch;
        std::vector<Int> p = plumbing ? family_plumbing(spec, m, &branch)
                                      : family_cp2(spec, m, &branch);
        if (m == 0)
            rep.branch = branch;

        // (i) det condition
        CharData cd;
        SystemOfInvariants sys;
        if (plumbing) {
            Int S = plumbing_diophantine(p);
            if (S != plumbing_diophantine(spec.base.params)) {
                rep.failures.push_back("member " + std::to_string(m) +
                                       ": Diophantine value changed");
                continue;
            }
            cd = chardata_plumbing(p[0], p[1], p[2], p[3], p[4]);
            sys = system_from_plumbing(p[0], p[1], p[2]);
            classes.push_back(triple_class(p[0], p[1], p[2]));
        } else {
            cd = chardata_cp2(p[0], p[1], p[2]);
            sys = system_from_cp2_bundle(p[0], 0);
            classes.push_back({abs(p[0]), 0, 0});
        }
        systems.push_back(sys);

        // (ii) invariants constant along the family
        SInvariants inv = s_invariants(cd);
        if (!(inv == base_inv))
            rep.failures.push_back("member " + std::to_string(m) +
                                   ": s-invariants differ from base");

        // (iii) congruent to the base mod T
        for (size_t j = 0; j < p.size(); ++j)
            if ((p[j] - spec.base.params[j]) % T != 0)
                rep.failures.push_back("member " + std::to_string(m) +
                                       ": parameter not congruent mod T");

        rep.members.push_back(CertifiedMember{m, p, class_of(inv)});
    }

    // (iv) pairwise distinct base manifolds, modulo the oracle bound
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j) {
            if (classes[i] == classes[j]) {
                rep.failures.push_back("members " + std::to_string(i) + " and " +
                                       std::to_string(j) + ": equal parameter classes");
                continue;
            }
            if (equivalence_search(systems[i], systems[j], rep.equivalence_bound)) {
                rep.failures.push_back("members " + std::to_string(i) + " and " +
                                       std::to_string(j) + ": equivalent systems (" +
                                       branch_name(rep.branch) + ")");
            }
        }

    rep.ok = rep.failures.empty();
    return rep;
}

}  // namespace s2s5
