#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace s2s5 {

// Unbounded integer used throughout the invariant pipeline. Table 2
// parameters reach ~3e11 and the s1 formula forms products of order 1e34,
// so fixed-width arithmetic is not an option here.
using Int = boost::multiprecision::cpp_int;

// An element of Q/Z as a reduced fraction with num/den in [0,1),
// gcd(num,den) = 1, den > 0.
class ResidueClass {
public:
    ResidueClass() : num_(0), den_(1) {}
    ResidueClass(const Int& num, const Int& den);

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }

    // canonical representative of *this + k * b mod 1
    ResidueClass add_scaled(const ResidueClass& b, const Int& k) const;
    ResidueClass operator+(const ResidueClass& b) const { return add_scaled(b, 1); }
    ResidueClass operator-() const;

    bool operator==(const ResidueClass& o) const = default;

    std::string str() const;

private:
    Int num_;
    Int den_;
};

// canonical representative of num/den mod 1; throws on den == 0
ResidueClass qz_normalize(const Int& num, const Int& den);

// s*lambda + t*mu = g with g > 0; among all valid (s,t) the pair with
// smallest |s| is chosen, ties broken by s >= 0
struct BezoutPair {
    Int g;
    Int s;
    Int t;
};

BezoutPair ext_gcd(const Int& lambda, const Int& mu);

}  // namespace s2s5
