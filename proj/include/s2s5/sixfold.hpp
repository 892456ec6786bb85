#pragma once

#include <array>
#include <optional>
#include <vector>

#include "s2s5/rational.hpp"

namespace s2s5 {

// Jupp system of invariants of a closed simply-connected 6-manifold with
// torsion-free homology: (H^2 rank, trilinear cup form, first Pontryagin
// form, second Stiefel-Whitney vector, half third Betti number).
//
// General rank is representable, but every operation below requires
// rank 2 and throws std::invalid_argument("unsupported rank") otherwise.
struct SystemOfInvariants {
    int rank = 0;
    // cup-form coefficients mu(e_i,e_j,e_k) over i <= j <= k,
    // ordered lexicographically on (i,j,k)
    std::vector<Int> mu;
    // p1 coefficients on the dual basis
    std::vector<Int> p1;
    // w2 as a 0/1 vector
    std::vector<int> w2;
    Int half_b3 = 0;

    bool spin() const;
    // trilinear evaluation in basis coordinates (rank 2 only)
    Int mu_eval(const std::array<Int, 2>& x, const std::array<Int, 2>& y,
                const std::array<Int, 2>& z) const;
    Int p1_eval(const std::array<Int, 2>& x) const;

    bool operator==(const SystemOfInvariants&) const = default;
};

// Euler class in the basis (e1, e2); primitive means gcd of coords is 1.
struct EulerClass {
    Int lambda;
    Int mu;

    bool primitive() const { return gcd(lambda, mu) == 1; }
};

// Boundary of the plumbing indexed by (alpha1, alpha2, alpha3): spin,
// mu-coefficients (a1-a3, -a3, -a3, a2-a3), p1 = (4(a1-a3), 4(a2-a3)).
SystemOfInvariants system_from_plumbing(const Int& a1, const Int& a2, const Int& a3);

// Linear S^2-bundle over CP^2 with parameters (alpha, beta), beta in
// {-1, 0, +1}: mu = (0, 1, beta, alpha+beta), w2 = ((1-beta) mod 2) e1,
// p1 = (0, 4 alpha + 3 + beta).
SystemOfInvariants system_from_cp2_bundle(const Int& alpha, int beta);

// Wall/Jupp congruence by residue enumeration: spin systems check
// 4 mu(x,x,x) = p(x) mod 24 over all x mod 24; non-spin systems check
// mu(W,W,W) = p(W) mod 48 over all W = w2 mod 2.
bool check_realizability(const SystemOfInvariants& sys);

// determinant of the 2x2 bilinear form [mu(e_i, e_j, e)]
Int det_at_euler(const SystemOfInvariants& sys, const EulerClass& e);

// e is an admissible Euler class: primitive, det = +-1, and for non-spin
// systems additionally w2 = e mod 2 and det = -1.
bool orbit_space_admissible(const SystemOfInvariants& sys, const EulerClass& e);

// Basis change phi (columns are images of a's basis vectors) with
// det = +-1, entries bounded by `bound`, pulling b's (mu, p1) back to a's
// and mapping w2(a) to w2(b); first hit in lexicographic entry order.
// Absence is inconclusive, not a proof of inequivalence.
std::optional<std::array<Int, 4>> equivalence_search(const SystemOfInvariants& a,
                                                     const SystemOfInvariants& b,
                                                     long long bound);

}  // namespace s2s5
