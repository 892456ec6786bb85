#pragma once

#include "s2s5/rational.hpp"
#include "s2s5/sixfold.hpp"

namespace s2s5 {

// Characteristic data (A,B,C,D,u,v) of an admissible (6-manifold, Euler
// class) pair in the basis (e, f), plus the spin flag and det = AC - B^2.
struct CharData {
    Int A, B, C, D;
    Int u, v;
    bool spin = true;
    int det = -1;
};

// The triple (s1, s2, s3~ = s3 - 4 s2) identifying an oriented
// diffeomorphism type.
struct SInvariants {
    ResidueClass s1;
    ResidueClass s2;
    ResidueClass s3t;

    bool operator==(const SInvariants&) const = default;
};

// Validates det and the parity conditions:
//   spin:     A even, B odd, C odd (det -1 additionally forces 8 | A)
//   non-spin: det = -1, A even, C even, B odd
// Throws std::invalid_argument on violation.
CharData chardata_direct(const Int& A, const Int& B, const Int& C, const Int& D,
                         const Int& u, const Int& v, bool spin);

// Characteristic data of (N_A, e) for the plumbing triple (a1,a2,a3) and
// primitive e = lambda e1 + mu e2 with det(N_A, e) = +-1, computed with
// the canonical Bezout pair (s,t). bezout_shift = m replaces the basis
// vector f by f + m*e (equivalently, moves to the Bezout pair
// (s + m*mu, t - m*lambda)); the s-invariants are independent of this
// choice (property-tested).
CharData chardata_plumbing(const Int& a1, const Int& a2, const Int& a3,
                           const Int& lambda, const Int& mu,
                           const Int& bezout_shift = 0);

// Characteristic data of (N_(alpha,0), e): requires lambda odd, mu even,
// gcd = 1 and mu^2 alpha - lambda^2 = -1. bezout_shift as above.
CharData chardata_cp2(const Int& alpha, const Int& lambda, const Int& mu,
                      const Int& bezout_shift = 0);

// Kreck-Stolz s-invariants of the circle-bundle total space, evaluated
// exactly over the rationals and canonicalized into Q/Z. Denominator
// bounds (28, 12, 2) are asserted. In the spin det = +1 case, A = 0 is
// rejected as "degenerate signature" (unreachable for valid data since
// AC = B^2 + 1 != 0).
SInvariants s_invariants(const CharData& cd);

// Value sets of the three cases:
//   spin, det -1:  (s2, s3~) in {(j/3, 0)} or {(j/6, 1/2)}
//   spin, det +1:  (s2, s3~) in {(j/3, 0)} or {((1+2j)/12, 1/2)}
//   non-spin:      s3~ = 0, s2 = j/6, s1 = k/14
bool value_set_check(const SInvariants& s, bool spin, int det);

// Connected sum with the homotopy sphere Sigma_r: s1 shifts by r/28.
SInvariants connected_sum_sphere(const SInvariants& s, const Int& r);

}  // namespace s2s5
