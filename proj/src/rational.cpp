#include "s2s5/rational.hpp"

namespace s2s5 {

namespace {

Int floor_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0)
        r += m;
    return r;
}

}  // namespace

ResidueClass::ResidueClass(const Int& num, const Int& den) {
    if (den == 0)
        throw std::invalid_argument("degenerate fraction: zero denominator");
    den_ = den < 0 ? Int(-den) : den;
    num_ = floor_mod(den < 0 ? Int(-num) : num, den_);
    Int g = gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

ResidueClass qz_normalize(const Int& num, const Int& den) {
    return ResidueClass(num, den);
}

ResidueClass ResidueClass::add_scaled(const ResidueClass& b, const Int& k) const {
    return ResidueClass(num_ * b.den_ + k * b.num_ * den_, den_ * b.den_);
}

ResidueClass ResidueClass::operator-() const {
    return ResidueClass(-num_, den_);
}

std::string ResidueClass::str() const {
    return num_.str() + "/" + den_.str();
}

BezoutPair ext_gcd(const Int& lambda, const Int& mu) {
    if (lambda == 0 && mu == 0)
        throw std::invalid_argument("ext_gcd(0, 0) is undefined");

    Int old_r = lambda, r = mu;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    Int g = old_r, s0 = old_s;
    if (g < 0) {
        g = -g;
        s0 = -s0;
    }

    // general solution: s0 + k*(mu/g); pick smallest |s|, ties s >= 0
    Int step = mu / g;
    if (step != 0) {
        Int a = step < 0 ? Int(-step) : step;
        Int rlo = floor_mod(s0, a);       // in [0, a)
        Int rhi = rlo - a;                // in [-a, 0)
        s0 = (rlo * 2 <= a) ? rlo : rhi;  // tie (2r == a) keeps r >= 0
    }
    Int t0 = (mu == 0) ? Int(0) : Int((g - s0 * lambda) / mu);
    return BezoutPair{g, s0, t0};
}

}  // namespace s2s5
