#pragma once

#include <array>
#include <string>
#include <vector>

#include "s2s5/chardata.hpp"

namespace s2s5 {

// A point of (Z/28) x (Z/12) x (Z/2): the oriented diffeomorphism type
// with invariants (i/28, j/12, k/2).
struct DiffeoClass {
    int i = 0;  // 28 s1
    int j = 0;  // 12 s2
    int k = 0;  // 2 s3~

    auto operator<=>(const DiffeoClass&) const = default;
};

DiffeoClass class_of(const SInvariants& s);
SInvariants invariants_of(const DiffeoClass& c);

struct ActionFlags {
    bool spin_quotient = false;
    bool nonspin_quotient = false;

    bool admits() const { return spin_quotient || nonspin_quotient; }
};

// spin quotient:     k = 1, or k = 0 and j = 0 mod 4
// non-spin quotient: k = 0 and i, j both even
ActionFlags admits_free_action(const DiffeoClass& c);

enum class RicciStatus { KnownPositive, Open, NoAction };

// known positive: k = 1, or k = 0 and j = 0 mod 4,
//                 or k = 0 and i = 2 mod 4 and j = 2 mod 4
// open: admits an action but none of the above (the 21 classes with
//       i = 0 mod 4, j = 2 mod 4, k = 0)
RicciStatus ricci_status(const DiffeoClass& c);

enum class Pi4 { Zero, Z2 };

struct ClassAttributes {
    Pi4 pi4;
    std::array<int, 2> homeo_id;     // (j, k)
    std::array<int, 2> homotopy_id;  // (j, 0) if k = 0, (j mod 6, 1) if k = 1
    DiffeoClass reversed;
};

ClassAttributes class_attributes(const DiffeoClass& c);
DiffeoClass sum_sphere(const DiffeoClass& c, const Int& r);

struct CensusReport {
    int total = 0;
    int admitting = 0;
    int spin_quotient = 0;
    int nonspin_quotient = 0;
    int nonspin_exclusive = 0;
    int ricci_known = 0;
    int ricci_open = 0;
    int homeo_classes = 0;
    int homeo_admitting = 0;
    int homotopy_classes = 0;
    int homotopy_classes_k0 = 0;
    int homotopy_classes_k1 = 0;
    int homotopy_admitting = 0;
    int unoriented_total = 0;
    int unoriented_admitting = 0;

    std::string text() const;
    std::string json() const;
};

// Exhaustive iteration over all 672 classes; no closed-form counting.
CensusReport census();

}  // namespace s2s5
