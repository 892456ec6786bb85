#include "s2s5/census.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <sstream>

namespace s2s5 {

namespace {

int residue(const ResidueClass& r, int scale, int mod) {
    // r = n/d with d | scale; returns scale * r mod `mod`
    Int x = Int(scale) / r.den() * r.num();
    return static_cast<int>(x % mod);
}

}  // namespace

DiffeoClass class_of(const SInvariants& s) {
    if (28 % s.s1.den() != 0 || 12 % s.s2.den() != 0 || 2 % s.s3t.den() != 0)
        throw std::invalid_argument("invariant denominators exceed (28, 12, 2)");
    return DiffeoClass{residue(s.s1, 28, 28), residue(s.s2, 12, 12), residue(s.s3t, 2, 2)};
}

SInvariants invariants_of(const DiffeoClass& c) {
    return SInvariants{ResidueClass(c.i, 28), ResidueClass(c.j, 12), ResidueClass(c.k, 2)};
}

ActionFlags admits_free_action(const DiffeoClass& c) {
    ActionFlags f;
    f.spin_quotient = c.k == 1 || (c.k == 0 && c.j % 4 == 0);
    f.nonspin_quotient = c.k == 0 && c.i % 2 == 0 && c.j % 2 == 0;
    return f;
}

RicciStatus ricci_status(const DiffeoClass& c) {
    bool known = c.k == 1 || (c.k == 0 && c.j % 4 == 0) ||
                 (c.k == 0 && c.i % 4 == 2 && c.j % 4 == 2);
    if (known)
        return RicciStatus::KnownPositive;
    return admits_free_action(c).admits() ? RicciStatus::Open : RicciStatus::NoAction;
}

ClassAttributes class_attributes(const DiffeoClass& c) {
    ClassAttributes a;
    a.pi4 = c.k == 0 ? Pi4::Z2 : Pi4::Zero;
    a.homeo_id = {c.j, c.k};
    a.homotopy_id = c.k == 0 ? std::array<int, 2>{c.j, 0} : std::array<int, 2>{c.j % 6, 1};
    a.reversed = DiffeoClass{(28 - c.i) % 28, (12 - c.j) % 12, (2 - c.k) % 2};
    return a;
}

DiffeoClass sum_sphere(const DiffeoClass& c, const Int& r) {
    Int i = (c.i + r) % 28;
    if (i < 0)
        i += 28;
    return DiffeoClass{static_cast<int>(i), c.j, c.k};
}

CensusReport census() {
    CensusReport rep;
    std::set<std::array<int, 2>> homeo, homeo_adm, homotopy, homotopy_adm;
    std::set<std::set<DiffeoClass>> orbits, orbits_adm;

    for (int i = 0; i < 28; ++i)
        for (int j = 0; j < 12; ++j)
            for (int k = 0; k < 2; ++k) {
                DiffeoClass c{i, j, k};
                ++rep.total;
                ActionFlags f = admits_free_action(c);
                if (f.admits())
                    ++rep.admitting;
                if (f.spin_quotient)
                    ++rep.spin_quotient;
                if (f.nonspin_quotient)
                    ++rep.nonspin_quotient;
                if (f.nonspin_quotient && !f.spin_quotient)
                    ++rep.nonspin_exclusive;
                switch (ricci_status(c)) {
                    case RicciStatus::KnownPositive: ++rep.ricci_known; break;
                    case RicciStatus::Open: ++rep.ricci_open; break;
                    case RicciStatus::NoAction: break;
                }
                ClassAttributes at = class_attributes(c);
                homeo.insert(at.homeo_id);
                homotopy.insert(at.homotopy_id);
                if (f.admits()) {
                    homeo_adm.insert(at.homeo_id);
                    homotopy_adm.insert(at.homotopy_id);
                }
                std::set<DiffeoClass> orbit{c, at.reversed};
                orbits.insert(orbit);
                if (f.admits())
                    orbits_adm.insert(orbit);
            }

    rep.homeo_classes = static_cast<int>(homeo.size());
    rep.homeo_admitting = static_cast<int>(homeo_adm.size());
    rep.homotopy_classes = static_cast<int>(homotopy.size());
    rep.homotopy_admitting = static_cast<int>(homotopy_adm.size());
    for (const auto& h : homotopy)
        (h[1] == 0 ? rep.homotopy_classes_k0 : rep.homotopy_classes_k1)++;
    rep.unoriented_total = static_cast<int>(orbits.size());
    rep.unoriented_admitting = static_cast<int>(orbits_adm.size());
    return rep;
}

std::string CensusReport::text() const {
    std::ostringstream os;
    os << "oriented diffeomorphism types        " << total << "\n"
       << "  admitting a free circle action     " << admitting << "\n"
       << "    with spin quotient               " << spin_quotient << "\n"
       << "    with non-spin quotient           " << nonspin_quotient << "\n"
       << "    with non-spin quotient only      " << nonspin_exclusive << "\n"
       << "  invariant Ric > 0 known            " << ricci_known << "\n"
       << "  invariant Ric > 0 open             " << ricci_open << "\n"
       << "homeomorphism classes                " << homeo_classes << " (" << homeo_admitting
       << " admitting)\n"
       << "homotopy classes                     " << homotopy_classes << " = "
       << homotopy_classes_k0 << " + " << homotopy_classes_k1 << " (" << homotopy_admitting
       << " admitting)\n"
       << "unoriented diffeomorphism types      " << unoriented_total << " ("
       << unoriented_admitting << " admitting)\n";
    return os.str();
}

std::string CensusReport::json() const {
    nlohmann::json j{
        {"total", total},
        {"admitting", admitting},
        {"spin_quotient", spin_quotient},
        {"nonspin_quotient", nonspin_quotient},
        {"nonspin_exclusive", nonspin_exclusive},
        {"ricci_known", ricci_known},
        {"ricci_open", ricci_open},
        {"homeo_classes", homeo_classes},
        {"homeo_admitting", homeo_admitting},
        {"homotopy_classes", homotopy_classes},
        {"homotopy_classes_k0", homotopy_classes_k0},
        {"homotopy_classes_k1", homotopy_classes_k1},
        {"homotopy_admitting", homotopy_admitting},
        {"unoriented_total", unoriented_total},
        {"unoriented_admitting", unoriented_admitting},
    };
    return j.dump(2);
}

}  // namespace s2s5
