#include "s2s5/search.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace s2s5 {

namespace {

long long ll_abs(long long x) { return x < 0 ? -x : x; }
long long ll_gcd(long long a, long long b) { return std::gcd(ll_abs(a), ll_abs(b)); }

// 64-bit version of ext_gcd for primitive pairs: same canonical choice
// (minimal |s|, ties s >= 0).
void ll_bezout(long long lam, long long mu, long long* s_out, long long* t_out) {
    long long old_r = lam, r = mu, old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    long long s0 = old_r < 0 ? -old_s : old_s;
    long long step = old_r == 0 ? 0 : mu / old_r;
    if (step != 0) {
        long long a = ll_abs(step);
        long long rlo = s0 % a;
        if (rlo < 0) rlo += a;
        s0 = (rlo * 2 <= a) ? rlo : rlo - a;
    }
    *s_out = s0;
    *t_out = mu == 0 ? 0 : (1 - s0 * lam) / mu;
}

// ---------------------------------------------------------------------
// int128 fast path for the plumbing family. Every step is overflow
// checked; on overflow the caller falls back to the unbounded-integer
// pipeline. The (s, t) convention is the canonical Bezout pair.
// ---------------------------------------------------------------------

using i128 = __int128;

struct Ovf {
    bool bad = false;
    i128 mul(i128 a, i128 b) {
        i128 r;
        if (__builtin_mul_overflow(a, b, &r))
            bad = true;
        return r;
    }
    i128 add(i128 a, i128 b) {
        i128 r;
        if (__builtin_add_overflow(a, b, &r))
            bad = true;
        return r;
    }
    i128 sub(i128 a, i128 b) {
        i128 r;
        if (__builtin_sub_overflow(a, b, &r))
            bad = true;
        return r;
    }
};

int mod_small(i128 x, int m) {
    int r = static_cast<int>(x % m);
    return r < 0 ? r + m : r;
}

// Returns false on overflow (caller must use the exact path).
bool fast_plumbing_triple(long long a1, long long a2, long long a3, long long lam,
                          long long mu, DiffeoClass* out) {
    long long s, t;
    ll_bezout(lam, mu, &s, &t);
    Ovf o;
    i128 d13 = a1 - a3, d23 = a2 - a3;
    i128 A = o.add(o.sub(o.mul(o.mul(o.mul(lam, lam), lam), d13),
                         o.mul(o.mul(o.mul(3 * (i128)lam, mu), lam + mu), a3)),
                   o.mul(o.mul(o.mul(mu, mu), mu), d23));
    i128 B = o.add(o.add(o.mul(o.mul(lam, lam), o.sub(o.mul(-t, d13), o.mul(s, a3))),
                         o.mul(o.mul(o.mul(2 * (i128)lam, mu), t - s), a3)),
                   o.mul(o.mul(mu, mu), o.add(o.mul(t, a3), o.mul(s, d23))));
    i128 C = o.add(
        o.mul(lam, o.sub(o.add(o.mul(o.mul(t, t), d13), o.mul(o.mul(2 * (i128)t, s), a3)),
                         o.mul(o.mul(s, s), a3))),
        o.mul(mu, o.add(o.sub(o.mul(o.mul(2 * (i128)t, s), a3), o.mul(o.mul(t, t), a3)),
                        o.mul(o.mul(s, s), d23))));
    i128 D = o.add(o.sub(o.mul(o.mul(o.mul(-(i128)t, t), t), d13),
                         o.mul(o.mul(o.mul(3 * (i128)t, s), t - s), a3)),
                   o.mul(o.mul(o.mul(s, s), s), d23));
    i128 u6 = o.add(o.add(o.mul(o.mul(o.mul(lam, 1 - (i128)lam), 1 + (i128)lam), d13),
                          o.mul(o.mul(o.mul(3 * (i128)lam, mu), lam + mu), a3)),
                    o.mul(o.mul(o.mul(mu, 1 - (i128)mu), 1 + (i128)mu), d23));
    i128 v6 = o.add(o.add(o.mul(o.mul(o.mul(-(i128)t, 1 - (i128)t), 1 + (i128)t), d13),
                          o.mul(o.mul(o.mul(3 * (i128)t, s), t - s), a3)),
                    o.mul(o.mul(o.mul(s, 1 - (i128)s), 1 + (i128)s), d23));
    if (o.bad || u6 % 6 != 0 || v6 % 6 != 0)
        return false;
    i128 u = u6 / 6, v = v6 / 6;

    i128 det = o.sub(o.mul(A, C), o.mul(B, B));
    i128 bd = o.sub(B, D);
    i128 n1, n2;
    if (det == -1) {
        n1 = o.add(
            o.add(o.mul(-144,
                        o.add(o.sub(o.mul(C, o.mul(u, u)), o.mul(2 * B, o.mul(u, v))),
                              o.mul(A, o.mul(v, v)))),
                  o.mul(o.mul(16, o.sub(2, o.mul(3 * B, bd))), u)),
            o.add(o.mul(o.mul(48 * A, bd), v), o.sub(A, o.mul(o.mul(4 * A, bd), bd))));
        n2 = o.add(o.mul(o.mul(12, D + 1), u),
                   o.mul(A, o.add(o.sub(o.mul(2 * C, C), o.mul(2 * B, D)), o.mul(D, D))));
    } else if (det == 1) {
        if (A == 0)
            return false;  // exact path raises the degenerate-signature error
        i128 sgnA = A > 0 ? 1 : -1;
        n1 = o.add(
            o.add(o.mul(144, o.add(o.sub(o.mul(C, o.mul(u, u)), o.mul(2 * B, o.mul(u, v))),
                                   o.mul(A, o.mul(v, v)))),
                  o.mul(o.mul(16, o.add(2, o.mul(3 * B, bd))), u)),
            o.add(o.sub(o.add(A, o.mul(o.mul(4 * A, bd), bd)), o.mul(o.mul(48 * A, bd), v)),
                  -2 * sgnA));
        n2 = o.add(o.sub(o.mul(o.mul(12, D + 1), u),
                         o.mul(A, o.add(o.sub(o.mul(2 * C, C), o.mul(2 * B, D)),
                                        o.mul(D, D)))),
                   o.mul(C, o.add(1, o.mul(C, C))));
    } else {
        return false;  // inadmissible, caller filters on det
    }
    if (o.bad)
        return false;
    // 28 s1 = n1 / 8 mod 28 and 12 s2 = n2 / 2 mod 12 (both exact for
    // admissible spin data; bail out to the exact path otherwise)
    if (n1 % 8 != 0 || n2 % 2 != 0)
        return false;
    *out = DiffeoClass{mod_small(n1 / 8, 28), mod_small(n2 / 2, 12), mod_small(D + 1, 2)};
    return true;
}

Witness make_plumbing_witness(long long a1, long long a2, long long a3, long long lam,
                              long long mu) {
    Witness w;
    w.family = Family::Plumbing;
    w.params = {a1, a2, a3, lam, mu};
    w.cd = chardata_plumbing(a1, a2, a3, lam, mu);
    w.inv = s_invariants(w.cd);
    return w;
}

Witness make_cp2_witness(const Int& alpha, long long lam, long long mu) {
    Witness w;
    w.family = Family::Cp2;
    w.params = {alpha, lam, mu};
    w.cd = chardata_cp2(alpha, lam, mu);
    w.inv = s_invariants(w.cd);
    return w;
}

Witness make_direct_witness(const Int& A, const Int& u) {
    Witness w;
    w.family = Family::DirectNonspin;
    w.params = {A, 1, 0, 1, u, 0};
    w.cd = chardata_direct(A, 1, 0, 1, u, 0, /*spin=*/false);
    w.inv = s_invariants(w.cd);
    return w;
}

DiffeoClass plumbing_triple(long long a1, long long a2, long long a3, long long lam,
                            long long mu) {
    DiffeoClass c;
    if (fast_plumbing_triple(a1, a2, a3, lam, mu, &c))
        return c;
    return class_of(s_invariants(chardata_plumbing(a1, a2, a3, lam, mu)));
}

// All admissible (a1, a2, a3) for a fixed primitive (lam, mu): the det
// constraint det = c*a2 - d = +-1 with c = mu*(lam*a1 - (lam+mu)*a3) and
// d = lam*(lam+mu)*a1*a3 determines a2 up to the two signs, so the scan
// is O(alpha_bound^2) per pair instead of O(alpha_bound^3).
template <class Sink>
void scan_plumbing_pair(long long lam, long long mu, long long ab, Sink&& sink) {
    const long long cs = mu * (lam + mu);
    for (long long a1 = -ab; a1 <= ab; ++a1) {
        const long long c0 = mu * lam * a1;
        const long long ds = lam * (lam + mu) * a1;
        // incremental: c = c0 - cs*a3, d = ds*a3
        long long c = c0 + cs * ab;
        long long d = -ds * ab;
        for (long long a3 = -ab; a3 <= ab; ++a3, c -= cs, d += ds) {
            if (c == 0) {
                if (d == 1 || d == -1)  // det = -d
                    for (long long a2 = -ab; a2 <= ab; ++a2)
                        sink(a1, a2, a3);
                continue;
            }
            // c | d + 1 iff d mod |c| is -1 or |c| - 1 (and c | d - 1
            // symmetrically); one division instead of two
            const long long ca = ll_abs(c);
            const long long r = d % ca;
            if (r == -1 || r + 1 == ca) {
                long long a2 = (d + 1) / c;
                if (ll_abs(a2) <= ab)
                    sink(a1, a2, a3);
            }
            if (r == 1 || r - 1 == -ca) {
                long long a2 = (d - 1) / c;
                if (ll_abs(a2) <= ab)
                    sink(a1, a2, a3);
            }
        }
    }
}

// The det form is invariant under (lam, mu) -> (-lam, -mu) and under the
// basis swap (a1, lam) <-> (a2, mu), so only one representative of each
// 4-element pair orbit is scanned; every hit is then replayed through the
// distinct orbit members. Coincidences (e.g. lam = mu) keep one copy per
// distinct pair, which is exactly once per witness since the scan of a
// pair already lists all of its admissible triples.
struct PairVariant {
    long long lam, mu;
    bool swapped;  // replay the triple as (a2, a1, a3)
};

int pair_orbit(long long lam, long long mu, PairVariant out[4]) {
    const long long cand[4][2] = {{lam, mu}, {-lam, -mu}, {mu, lam}, {-mu, -lam}};
    const bool sw[4] = {false, false, true, true};
    int n = 0;
    for (int g = 0; g < 4; ++g) {
        bool dup = false;
        for (int h = 0; h < g; ++h)
            dup = dup || (cand[h][0] == cand[g][0] && cand[h][1] == cand[g][1]);
        if (!dup)
            out[n++] = PairVariant{cand[g][0], cand[g][1], sw[g]};
    }
    return n;
}

bool pair_canonical(long long lam, long long mu) {
    auto key = [](long long l, long long m) { return std::pair(l, m); };
    auto p = key(lam, mu);
    return p <= key(-lam, -mu) && p <= key(mu, lam) && p <= key(-mu, -lam);
}

std::vector<std::pair<long long, long long>> primitive_pairs(long long eb) {
    std::vector<std::pair<long long, long long>> pairs;
    for (long long lam = -eb; lam <= eb; ++lam)
        for (long long mu = -eb; mu <= eb; ++mu)
            if (ll_gcd(lam, mu) == 1)
                pairs.emplace_back(lam, mu);
    return pairs;
}

// cp2 enumeration for one lambda: alpha = (lambda^2 - 1) / mu^2 when
// integral, plus the mu = 0 branch (lambda = +-1, alpha free).
template <class Sink>  // Sink(alpha, lam, mu)
void scan_cp2_lambda(long long lam, const SearchBox& box, Sink&& sink) {
    if (lam % 2 == 0)
        return;
    if (lam == 1 || lam == -1)
        for (long long a = -box.alpha_bound; a <= box.alpha_bound; ++a) {
            sink(Int(a), lam, 0);
        }
    Int num = Int(lam) * lam - 1;
    for (long long mu = -box.euler_bound; mu <= box.euler_bound; ++mu) {
        if (mu == 0 || mu % 2 != 0 || ll_gcd(lam, mu) != 1)
            continue;
        Int mu2 = Int(mu) * mu;
        if (num % mu2 != 0)
            continue;
        Int alpha = num / mu2;
        if (abs(alpha) <= box.alpha_bound)
            sink(alpha, lam, mu);
    }
}

void check_box(const SearchBox& box) {
    if (box.alpha_bound < 1 || box.euler_bound < 1)
        throw std::invalid_argument("search bounds must be >= 1");
    if (box.family == Family::Plumbing) {
        // the pruned scan forms d = lam*(lam+mu)*a1*a3 in 64-bit
        long double d = 2.0L * box.euler_bound * box.euler_bound * box.alpha_bound *
                        box.alpha_bound;
        if (d > 4.0e18L)
            throw std::invalid_argument("plumbing box too large for the 64-bit scan");
    }
}

int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

int worker_id() {
#ifdef _OPENMP
    return omp_get_thread_num();
#else
    return 0;
#endif
}

}  // namespace

std::vector<Int> Witness::canonical_key() const {
    std::vector<Int> key;
    key.reserve(params.size() + 1);
    Int asum = 0;
    size_t nalpha = family == Family::Plumbing ? 3 : family == Family::Cp2 ? 1 : 0;
    if (family == Family::DirectNonspin) {
        asum = abs(params[0]) + abs(params[4]);  // |A| + |u|
    } else {
        for (size_t i = 0; i < nalpha; ++i)
            asum += abs(params[i]);
    }
    key.push_back(asum);
    key.insert(key.end(), params.begin(), params.end());
    return key;
}

void for_each_witness(const SearchBox& box, const std::function<void(const Witness&)>& fn) {
    for (const Witness& w : enumerate_witnesses(box))
        fn(w);
}

std::vector<Witness> enumerate_witnesses(const SearchBox& box) {
    check_box(box);
    std::vector<std::vector<Witness>> found(worker_count());

    if (box.family == Family::Plumbing) {
        auto pairs = primitive_pairs(box.euler_bound);
#pragma omp parallel for schedule(dynamic)
        for (size_t i = 0; i < pairs.size(); ++i) {
            auto [lam, mu] = pairs[i];
            if (!pair_canonical(lam, mu))
                continue;
            PairVariant var[4];
            const int nv = pair_orbit(lam, mu, var);
            auto& local = found[worker_id()];
            scan_plumbing_pair(
                lam, mu, box.alpha_bound,
                [&](long long a1, long long a2, long long a3) {
                    for (int k = 0; k < nv; ++k) {
                        long long b1 = var[k].swapped ? a2 : a1;
                        long long b2 = var[k].swapped ? a1 : a2;
                        local.push_back(make_plumbing_witness(b1, b2, a3,
                                                              var[k].lam,
                                                              var[k].mu));
                    }
                });
        }
    } else if (box.family == Family::Cp2) {
#pragma omp parallel for schedule(dynamic)
        for (long long lam = -box.euler_bound; lam <= box.euler_bound; ++lam) {
            auto& local = found[worker_id()];
            scan_cp2_lambda(lam, box, [&](const Int& alpha, long long l, long long m) {
                local.push_back(make_cp2_witness(alpha, l, m));
            });
        }
    } else {
        // direct family: A = 2 mod 4 within |A| <= alpha_bound, odd u
        // within |u| <= euler_bound, B = 1, C = 0, D = 1, v = 0
        for (long long A = -box.alpha_bound; A <= box.alpha_bound; ++A)
            if ((A % 4 + 4) % 4 == 2)
                for (long long u = -box.euler_bound; u <= box.euler_bound; ++u)
                    if (u % 2 != 0)
                        found[0].push_back(make_direct_witness(A, u));
    }

    std::vector<Witness> all;
    for (auto& v : found) {
        all.insert(all.end(), std::make_move_iterator(v.begin()),
                   std::make_move_iterator(v.end()));
        v.clear();
    }
    std::sort(all.begin(), all.end(),
              [](const Witness& a, const Witness& b) { return a.before(b); });
    return all;
}

std::vector<Witness> enumerate_witnesses_naive(const SearchBox& box) {
    check_box(box);
    std::vector<Witness> all;
    long long ab = box.alpha_bound, eb = box.euler_bound;
    if (box.family == Family::Plumbing) {
        for (long long a1 = -ab; a1 <= ab; ++a1)
            for (long long a2 = -ab; a2 <= ab; ++a2)
                for (long long a3 = -ab; a3 <= ab; ++a3) {
                    SystemOfInvariants sys = system_from_plumbing(a1, a2, a3);
                    for (long long lam = -eb; lam <= eb; ++lam)
                        for (long long mu = -eb; mu <= eb; ++mu)
                            if (orbit_space_admissible(sys, EulerClass{lam, mu}))
                                all.push_back(make_plumbing_witness(a1, a2, a3, lam, mu));
                }
    } else if (box.family == Family::Cp2) {
        for (long long alpha = -ab; alpha <= ab; ++alpha) {
            SystemOfInvariants sys = system_from_cp2_bundle(alpha, 0);
            for (long long lam = -eb; lam <= eb; ++lam)
                for (long long mu = -eb; mu <= eb; ++mu)
                    if (orbit_space_admissible(sys, EulerClass{lam, mu}))
                        all.push_back(make_cp2_witness(alpha, lam, mu));
        }
    } else {
        throw std::invalid_argument("naive enumeration covers the bundle families only");
    }
    std::sort(all.begin(), all.end(),
              [](const Witness& a, const Witness& b) { return a.before(b); });
    return all;
}

CoverageReport coverage(const SearchBox& box, const std::set<DiffeoClass>& targets) {
    check_box(box);
    // per-thread best witness per target, merged by canonical order
    using Best = std::map<DiffeoClass, Witness>;
    std::vector<Best> best(worker_count());

    auto consider = [&](Best& local, Witness&& w) {
        DiffeoClass c = w.triple();
        if (!targets.contains(c))
            return;
        auto [it, inserted] = local.try_emplace(c, std::move(w));
        if (!inserted && w.before(it->second))
            it->second = std::move(w);
    };

    if (box.family == Family::Plumbing) {
        auto pairs = primitive_pairs(box.euler_bound);
#pragma omp parallel for schedule(dynamic)
        for (size_t i = 0; i < pairs.size(); ++i) {
            auto [lam, mu] = pairs[i];
            if (!pair_canonical(lam, mu))
                continue;
            PairVariant var[4];
            const int nv = pair_orbit(lam, mu, var);
            auto& local = best[worker_id()];
            scan_plumbing_pair(
                lam, mu, box.alpha_bound, [&](long long a1, long long a2, long long a3) {
                    for (int k = 0; k < nv; ++k) {
                        long long b1 = var[k].swapped ? a2 : a1;
                        long long b2 = var[k].swapped ? a1 : a2;
                        // cheap triple first; build the full witness only
                        // when it can improve the target's entry
                        DiffeoClass c =
                            plumbing_triple(b1, b2, a3, var[k].lam, var[k].mu);
                        if (!targets.contains(c))
                            continue;
                        Witness w = make_plumbing_witness(b1, b2, a3,
                                                          var[k].lam, var[k].mu);
                        if (w.triple() != c)
                            throw std::logic_error(
                                "fast path disagrees with exact path");
                        auto [it, inserted] = local.try_emplace(c, std::move(w));
                        if (!inserted && w.before(it->second))
                            it->second = std::move(w);
                    }
                });
        }
    } else if (box.family == Family::Cp2) {
#pragma omp parallel for schedule(dynamic)
        for (long long lam = -box.euler_bound; lam <= box.euler_bound; ++lam) {
            auto& local = best[worker_id()];
            scan_cp2_lambda(lam, box, [&](const Int& alpha, long long l, long long m) {
                consider(local, make_cp2_witness(alpha, l, m));
            });
        }
    } else {
        for (const Witness& w : enumerate_witnesses(box))
            consider(best[0], Witness(w));
    }

    CoverageReport rep;
    for (auto& local : best)
        for (auto& [c, w] : local) {
            auto [it, inserted] = rep.first_witness.try_emplace(c, std::move(w));
            if (!inserted && w.before(it->second))
                it->second = std::move(w);
        }
    for (const DiffeoClass& c : targets)
        if (!rep.first_witness.contains(c))
            rep.unhit.insert(c);
    return rep;
}

Witness realize_target(const DiffeoClass& target, long long budget) {
    ActionFlags flags = admits_free_action(target);
    if (!flags.admits())
        throw NoActionError("provably no free action for class (" +
                            std::to_string(target.i) + "," + std::to_string(target.j) +
                            "," + std::to_string(target.k) + ")");

    if (flags.spin_quotient) {
        // growing plumbing boxes; cost accounting approximates the number
        // of inner enumeration steps
        long long spent = 0;
        for (auto [ab, eb] : {std::pair<long long, long long>{4, 4},
                              {8, 8},
                              {16, 12},
                              {32, 16},
                              {64, 24},
                              {128, 32},
                              {256, 48},
                              {500, 64}}) {
            long long cost =
                static_cast<long long>(primitive_pairs(eb).size()) * (2 * ab + 1) * (2 * ab + 1);
            if (spent + cost > budget)
                throw BudgetExhaustedError("budget exhausted before finding a witness");
            spent += cost;
            CoverageReport rep = coverage(SearchBox{ab, eb, Family::Plumbing}, {target});
            if (!rep.unhit.contains(target))
                return rep.first_witness.at(target);
        }
        throw BudgetExhaustedError("search boxes exhausted without finding a witness");
    }

    // non-spin only: k = 0, i even, j in {2, 6, 10}
    if (target.i % 4 == 0) {
        // direct construction: 12 s2 = A mod 12, 28 s1 = 18u - A mod 28
        long long A = target.j;  // j = 2 mod 4, so A = 2 mod 4 and A = j mod 12
        for (long long u = 1; u <= 13; u += 2)
            for (long long su : {u, -u})
                if (((18 * su - A) % 28 + 28) % 28 == target.i)
                    return make_direct_witness(A, su);
        throw std::logic_error("direct non-spin scan failed");  // unreachable
    }

    // i = 2 mod 4: realized in the cp2 family
    long long spent = 0;
    for (long long eb : {16, 64, 256, 1024, 3000}) {
        long long ab = eb * eb / 4 + 1;
        long long cost = eb * eb;
        if (spent + cost > budget)
            throw BudgetExhaustedError("budget exhausted before finding a witness");
        spent += cost;
        CoverageReport rep = coverage(SearchBox{ab, eb, Family::Cp2}, {target});
        if (!rep.unhit.contains(target))
            return rep.first_witness.at(target);
    }
    throw BudgetExhaustedError("search boxes exhausted without finding a witness");
}

}  // namespace s2s5
