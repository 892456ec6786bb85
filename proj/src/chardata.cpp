#include "s2s5/chardata.hpp"

namespace s2s5 {

namespace {

bool even(const Int& x) { return x % 2 == 0; }

Int exact_div(const Int& num, long long den, const char* what) {
    if (num % den != 0)
        throw std::invalid_argument(std::string("non-integral ") + what +
                                    " (transcription fault)");
    return num / den;
}

// Replace f by f + m*e in the basis (e, f).  The cup-product values follow
// multilinearity; v follows from the decomposition of p1 in the dual basis,
// whose f*-coefficient is 24v + 4D (spin) or 24v + 3B + 6C + 4D (non-spin)
// and picks up m times the e*-coefficient 24u + 4A (resp. 48u + A).
void apply_basis_shift(Int& B, Int& C, Int& D, const Int& A, const Int& u,
                       Int& v, const Int& m, bool spin) {
    if (m == 0) return;
    Int B0 = B, C0 = C;
    B = B0 + m * A;
    C = C0 + 2 * m * B0 + m * m * A;
    Int D0 = D;
    D = D0 + 3 * m * C0 + 3 * m * m * B0 + m * m * m * A;
    if (spin) {
        v += m * u + exact_div(m * A * (1 - m * m) - 3 * m * (C0 + m * B0), 6,
                               "shifted v");
    } else {
        v += 2 * m * u - exact_div(m * A * (1 + m) * (1 + 2 * m) +
                                       6 * m * B0 * (1 + m) + 6 * m * C0,
                                   12, "shifted v");
    }
}

CharData validated(Int A, Int B, Int C, Int D, Int u, Int v, bool spin) {
    Int det = A * C - B * B;
    if (det != 1 && det != -1)
        throw std::invalid_argument("det(N, e) must be +-1");
    if (spin) {
        if (!even(A) || even(B) || even(C))
            throw std::invalid_argument("spin parity violated: A even, B and C odd required");
        // B, C odd: AC = B^2 - 1 = 0 mod 8 forces 8 | A when det = -1;
        // AC = B^2 + 1 = 2 mod 8 forces A = 2 mod 4 when det = +1
        if (det == -1 && A % 8 != 0)
            throw std::invalid_argument("spin parity violated: 8 | A required");
        if (det == 1 && A % 4 != 2 && A % 4 != -2)
            throw std::invalid_argument(
                "spin parity violated: A = 2 mod 4 required");
    } else {
        if (det != -1)
            throw std::invalid_argument("non-spin orbit space requires det = -1");
        if (!even(A) || !even(C) || even(B))
            throw std::invalid_argument(
                "non-spin parity violated: A, C even, B odd required");
    }
    return CharData{std::move(A), std::move(B), std::move(C), std::move(D),
                    std::move(u), std::move(v), spin, static_cast<int>(det)};
}

}  // namespace

CharData chardata_direct(const Int& A, const Int& B, const Int& C, const Int& D,
                         const Int& u, const Int& v, bool spin) {
    return validated(A, B, C, D, u, v, spin);
}

CharData chardata_plumbing(const Int& a1, const Int& a2, const Int& a3,
                           const Int& lambda, const Int& mu,
                           const Int& bezout_shift) {
    if (gcd(lambda, mu) != 1)
        throw std::invalid_argument("Euler class must be primitive");
    BezoutPair bz = ext_gcd(lambda, mu);
    const Int& s = bz.s;
    const Int& t = bz.t;

    Int A = lambda * lambda * lambda * (a1 - a3) - 3 * lambda * mu * (lambda + mu) * a3 +
            mu * mu * mu * (a2 - a3);
    Int B = lambda * lambda * (-t * (a1 - a3) - s * a3) + 2 * lambda * mu * (t - s) * a3 +
            mu * mu * (t * a3 + s * (a2 - a3));
    Int C = lambda * (t * t * (a1 - a3) + 2 * t * s * a3 - s * s * a3) +
            mu * (-t * t * a3 + 2 * t * s * a3 + s * s * (a2 - a3));
    Int D = -t * t * t * (a1 - a3) - 3 * t * s * (t - s) * a3 + s * s * s * (a2 - a3);
    // u = lam(1-lam)(1+lam)/6 (a1-a3) + lam mu (lam+mu)/2 a3 + mu(1-mu)(1+mu)/6 (a2-a3)
    Int u = exact_div(lambda * (1 - lambda) * (1 + lambda) * (a1 - a3) +
                          3 * lambda * mu * (lambda + mu) * a3 +
                          mu * (1 - mu) * (1 + mu) * (a2 - a3),
                      6, "u");
    Int v = exact_div(-t * (1 - t) * (1 + t) * (a1 - a3) + 3 * t * s * (t - s) * a3 +
                          s * (1 - s) * (1 + s) * (a2 - a3),
                      6, "v");
    apply_basis_shift(B, C, D, A, u, v, bezout_shift, /*spin=*/true);
    return validated(std::move(A), std::move(B), std::move(C), std::move(D),
                     std::move(u), std::move(v), /*spin=*/true);
}

CharData chardata_cp2(const Int& alpha, const Int& lambda, const Int& mu,
                      const Int& bezout_shift) {
    if (even(lambda) || !even(mu))
        throw std::invalid_argument("cp2 family requires lambda odd and mu even");
    if (gcd(lambda, mu) != 1)
        throw std::invalid_argument("Euler class must be primitive");
    if (mu * mu * alpha - lambda * lambda != -1)
        throw std::invalid_argument("cp2 family requires mu^2 alpha - lambda^2 = -1");
    BezoutPair bz = ext_gcd(lambda, mu);
    const Int& s = bz.s;
    const Int& t = bz.t;

    Int fl = 4 * lambda * lambda - 1;
    Int A = mu * fl;
    Int B = fl * s - 2 * lambda;
    Int C = -3 * t * s * lambda + t + mu * s * s * alpha;
    Int D = 3 * t * t * s + s * s * s * alpha;
    Int u = exact_div(mu * (1 - mu * mu) * alpha, 12, "u");
    // v = alpha s(1-s^2)/6 - s alpha mu (2mu - s)/4
    //     + (lambda - s + 2t - 2t^2 s - 3t^2 mu)/4, over denominator 12
    Int v = exact_div(2 * alpha * s * (1 - s * s) - 3 * s * alpha * mu * (2 * mu - s) +
                          3 * (lambda - s + 2 * t - 2 * t * t * s - 3 * t * t * mu),
                      12, "v");
    apply_basis_shift(B, C, D, A, u, v, bezout_shift, /*spin=*/false);
    return validated(std::move(A), std::move(B), std::move(C), std::move(D),
                     std::move(u), std::move(v), /*spin=*/false);
}

SInvariants s_invariants(const CharData& cd) {
    const Int &A = cd.A, &B = cd.B, &C = cd.C, &D = cd.D, &u = cd.u, &v = cd.v;
    Int n1, n2, n3;  // numerators of s1/224, s2/24, s3~/2
    if (cd.spin && cd.det == -1) {
        Int bd = B - D;
        n1 = -144 * (C * u * u - 2 * B * u * v + A * v * v) + 16 * (2 - 3 * B * bd) * u +
             48 * A * bd * v + A - 4 * A * bd * bd;
        n2 = 12 * (D + 1) * u + A * (2 * C * C - 2 * B * D + D * D);
        n3 = D + 1;
    } else if (cd.spin && cd.det == 1) {
        if (A == 0)
            throw std::invalid_argument("degenerate signature: A = 0 with det = +1");
        Int sgnA = A > 0 ? 1 : -1;
        Int bd = B - D;
        n1 = -2 * sgnA + 144 * (C * u * u - 2 * B * u * v + A * v * v) +
             16 * (2 + 3 * B * bd) * u - 48 * A * bd * v + A + 4 * A * bd * bd;
        n2 = 12 * (D + 1) * u - A * (2 * C * C - 2 * B * D + D * D) + C * (1 + C * C);
        n3 = D + 1;
    } else {
        Int q = B + 3 * C + 2 * D;
        n1 = -144 * (4 * C * u * u - 4 * B * u * v + A * v * v) + 48 * B * q * u -
             24 * A * q * v -
             A * (A * C + 6 * B * C + 4 * B * D + 9 * C * C + 4 * D * D + 12 * C * D);
        n2 = -(B * B * C + 3 * B * C * C - A * B * D - 3 * A * C * D - A * D * D + C +
               C * C * C);
        n3 = 0;
    }
    SInvariants s{qz_normalize(n1, 224), qz_normalize(n2, 24), qz_normalize(n3, 2)};
    if (28 % s.s1.den() != 0 || 12 % s.s2.den() != 0 || 2 % s.s3t.den() != 0)
        throw std::logic_error("s-invariant denominator bound violated");
    return s;
}

bool value_set_check(const SInvariants& s, bool spin, int det) {
    bool s2_thirds = 3 % s.s2.den() == 0;
    bool s2_sixths = 6 % s.s2.den() == 0;
    bool s3_zero = s.s3t.is_zero();
    bool s3_half = s.s3t == ResidueClass(1, 2);
    if (spin && det == -1)
        return (s2_thirds && s3_zero) || (s2_sixths && s3_half);
    if (spin && det == 1) {
        // (1+2j)/12: denominator 12 or 4, numerator odd
        bool s2_odd_twelfth = s.s2.num() % 2 != 0 && 12 % s.s2.den() == 0 &&
                              s.s2.den() % 4 == 0;
        return (s2_thirds && s3_zero) || (s2_odd_twelfth && s3_half);
    }
    return s3_zero && s2_sixths && 14 % s.s1.den() == 0;
}

SInvariants connected_sum_sphere(const SInvariants& s, const Int& r) {
    return SInvariants{s.s1.add_scaled(ResidueClass(1, 28), r), s.s2, s.s3t};
}

}  // namespace s2s5
