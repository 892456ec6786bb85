#include "s2s5/sixfold.hpp"

#include <algorithm>

namespace s2s5 {

namespace {

void require_rank2(const SystemOfInvariants& sys) {
    if (sys.rank != 2)
        throw std::invalid_argument("unsupported rank");
}

Int floor_mod(const Int& a, long long m) {
    Int r = a % m;
    if (r < 0)
        r += m;
    return r;
}

}  // namespace

bool SystemOfInvariants::spin() const {
    return std::all_of(w2.begin(), w2.end(), [](int b) { return b == 0; });
}

Int SystemOfInvariants::mu_eval(const std::array<Int, 2>& x, const std::array<Int, 2>& y,
                                const std::array<Int, 2>& z) const {
    require_rank2(*this);
    const Int& m111 = mu[0];
    const Int& m112 = mu[1];
    const Int& m122 = mu[2];
    const Int& m222 = mu[3];
    return m111 * x[0] * y[0] * z[0] +
           m112 * (x[0] * y[0] * z[1] + x[0] * y[1] * z[0] + x[1] * y[0] * z[0]) +
           m122 * (x[0] * y[1] * z[1] + x[1] * y[0] * z[1] + x[1] * y[1] * z[0]) +
           m222 * x[1] * y[1] * z[1];
}

Int SystemOfInvariants::p1_eval(const std::array<Int, 2>& x) const {
    require_rank2(*this);
    return p1[0] * x[0] + p1[1] * x[1];
}

SystemOfInvariants system_from_plumbing(const Int& a1, const Int& a2, const Int& a3) {
    SystemOfInvariants sys;
    sys.rank = 2;
    sys.mu = {a1 - a3, -a3, -a3, a2 - a3};
    sys.p1 = {4 * (a1 - a3), 4 * (a2 - a3)};
    sys.w2 = {0, 0};
    sys.half_b3 = 0;
    return sys;
}

SystemOfInvariants system_from_cp2_bundle(const Int& alpha, int beta) {
    if (beta < -1 || beta > 1)
        throw std::invalid_argument("beta must be in {-1, 0, +1}");
    SystemOfInvariants sys;
    sys.rank = 2;
    sys.mu = {0, 1, beta, alpha + beta};
    sys.p1 = {0, 4 * alpha + 3 + beta};
    sys.w2 = {((1 - beta) % 2 + 2) % 2, 0};
    sys.half_b3 = 0;
    return sys;
}

bool check_realizability(const SystemOfInvariants& sys) {
    require_rank2(sys);
    if (sys.spin()) {
        for (long long x1 = 0; x1 < 24; ++x1)
            for (long long x2 = 0; x2 < 24; ++x2) {
                std::array<Int, 2> x{x1, x2};
                if (floor_mod(4 * sys.mu_eval(x, x, x) - sys.p1_eval(x), 24) != 0)
                    return false;
            }
        return true;
    }
    for (long long w1 = sys.w2[0]; w1 < 48; w1 += 2)
        for (long long w2 = sys.w2[1]; w2 < 48; w2 += 2) {
            std::array<Int, 2> w{w1, w2};
            if (floor_mod(sys.mu_eval(w, w, w) - sys.p1_eval(w), 48) != 0)
                return false;
        }
    return true;
}

Int det_at_euler(const SystemOfInvariants& sys, const EulerClass& e) {
    require_rank2(sys);
    std::array<Int, 2> e1{1, 0}, e2{0, 1}, ev{e.lambda, e.mu};
    Int m11 = sys.mu_eval(e1, e1, ev);
    Int m12 = sys.mu_eval(e1, e2, ev);
    Int m22 = sys.mu_eval(e2, e2, ev);
    return m11 * m22 - m12 * m12;
}

bool orbit_space_admissible(const SystemOfInvariants& sys, const EulerClass& e) {
    require_rank2(sys);
    if (!e.primitive())
        return false;
    Int det = det_at_euler(sys, e);
    if (det != 1 && det != -1)
        return false;
    if (!sys.spin()) {
        // parity condition (b) rules out det = +1 for non-spin orbit spaces
        if (det != -1)
            return false;
        if (floor_mod(e.lambda - sys.w2[0], 2) != 0 || floor_mod(e.mu - sys.w2[1], 2) != 0)
            return false;
    }
    return true;
}

std::optional<std::array<Int, 4>> equivalence_search(const SystemOfInvariants& a,
                                                     const SystemOfInvariants& b,
                                                     long long bound) {
    require_rank2(a);
    require_rank2(b);
    if (a.half_b3 != b.half_b3)
        return std::nullopt;

    for (long long p = -bound; p <= bound; ++p)
        for (long long q = -bound; q <= bound; ++q)
            for (long long r = -bound; r <= bound; ++r)
                for (long long s = -bound; s <= bound; ++s) {
                    long long det = p * s - q * r;
                    if (det != 1 && det != -1)
                        continue;
                    // images of a's basis under phi, in b's basis
                    std::array<Int, 2> f1{p, r}, f2{q, s};
                    if (b.mu_eval(f1, f1, f1) != a.mu[0])
                        continue;
                    if (b.mu_eval(f1, f1, f2) != a.mu[1])
                        continue;
                    if (b.mu_eval(f1, f2, f2) != a.mu[2])
                        continue;
                    if (b.mu_eval(f2, f2, f2) != a.mu[3])
                        continue;
                    if (b.p1_eval(f1) != a.p1[0] || b.p1_eval(f2) != a.p1[1])
                        continue;
                    Int w1 = p * a.w2[0] + q * a.w2[1];
                    Int w2 = r * a.w2[0] + s * a.w2[1];
                    if (floor_mod(w1 - b.w2[0], 2) != 0 || floor_mod(w2 - b.w2[1], 2) != 0)
                        continue;
                    return std::array<Int, 4>{p, q, r, s};
                }
    return std::nullopt;
}

}  // namespace s2s5
