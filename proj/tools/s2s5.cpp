#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "s2s5/census.hpp"
#include "s2s5/chardata.hpp"
#include "s2s5/family.hpp"
#include "s2s5/search.hpp"
#include "s2s5/tables.hpp"

#ifndef S2S5_DATA_DIR
#define S2S5_DATA_DIR "data"
#endif

namespace {

using namespace s2s5;

std::vector<Int> parse_int_list(const std::string& s, size_t n,
                                const std::string& what) {
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string field;
    while (std::getline(ss, field, ',')) out.emplace_back(field);
    if (out.size() != n) {
        throw CLI::ValidationError(what, "expected " + std::to_string(n) +
                                             " comma-separated integers");
    }
    return out;
}

std::string params_csv(const std::vector<Int>& p) {
    std::string out;
    for (size_t k = 0; k < p.size(); ++k) {
        if (k) out += ',';
        out += p[k].str();
    }
    return out;
}

void print_invariants(const CharData& cd, bool show_chardata) {
    SInvariants s = s_invariants(cd);
    DiffeoClass c = class_of(s);
    if (show_chardata) {
        std::cout << "A=" << cd.A << " B=" << cd.B << " C=" << cd.C
                  << " D=" << cd.D << " u=" << cd.u << " v=" << cd.v
                  << " spin=" << (cd.spin ? 1 : 0) << " det=" << cd.det
                  << "\n";
    }
    std::cout << "s1=" << s.s1.str() << " s2=" << s.s2.str()
              << " s3~=" << s.s3t.str() << "\n";
    std::cout << "class=(" << c.i << "," << c.j << "," << c.k << ")\n";
}

std::string branch_name(FamilyBranch b) {
    switch (b) {
        case FamilyBranch::Generic: return "generic";
        case FamilyBranch::FreeAlpha1: return "free-alpha1";
        case FamilyBranch::FreeAlpha2: return "free-alpha2";
        case FamilyBranch::FreeAlpha3: return "free-alpha3";
        case FamilyBranch::FreeAlpha: return "free-alpha";
    }
    return "?";
}

int run(int argc, char** argv) {
    CLI::App app{"Exact s-invariant computations for circle bundles over "
                 "6-manifolds"};
    app.require_subcommand(1);

    // ---- invariants ----
    auto* inv = app.add_subcommand(
        "invariants", "Characteristic data and s-invariants of one witness");
    inv->require_subcommand(1);

    std::string alpha_str, euler_str;
    bool show_cd = false;
    auto* inv_pl = inv->add_subcommand("plumbing", "Plumbing family N_A");
    inv_pl->add_option("--alpha", alpha_str, "a1,a2,a3")->required();
    inv_pl->add_option("--euler", euler_str, "lambda,mu")->required();
    inv_pl->add_flag("--show-chardata", show_cd);

    auto* inv_cp = inv->add_subcommand("cp2", "S2-bundle family N_(alpha,0)");
    inv_cp->add_option("--alpha", alpha_str, "alpha")->required();
    inv_cp->add_option("--euler", euler_str, "lambda,mu")->required();
    inv_cp->add_flag("--show-chardata", show_cd);

    std::string dA, dB, dC, dD, du, dv;
    bool d_spin = false, d_nonspin = false;
    auto* inv_dir =
        inv->add_subcommand("direct", "Raw characteristic data (A,..,v)");
    inv_dir->add_option("--A", dA)->required();
    inv_dir->add_option("--B", dB)->required();
    inv_dir->add_option("--C", dC)->required();
    inv_dir->add_option("--D", dD)->required();
    inv_dir->add_option("--u", du)->required();
    inv_dir->add_option("--v", dv)->required();
    auto* fs = inv_dir->add_flag("--spin", d_spin);
    inv_dir->add_flag("--nonspin", d_nonspin)->excludes(fs);

    // ---- search ----
    std::string s_family = "plumbing", s_targets, s_emit;
    long long s_abound = 1, s_ebound = 1;
    int s_jobs = 0;
    auto* sea = app.add_subcommand("search", "Enumerate witnesses in a box");
    sea->add_option("--family", s_family, "plumbing|cp2")
        ->check(CLI::IsMember({"plumbing", "cp2"}));
    sea->add_option("--alpha-bound", s_abound)->required();
    sea->add_option("--euler-bound", s_ebound)->required();
    sea->add_option("--targets", s_targets,
                    "'all' or a file of I,J,K lines; coverage mode");
    sea->add_option("--emit", s_emit, "csv")->check(CLI::IsMember({"csv"}));
    sea->add_option("--jobs", s_jobs, "worker threads");

    // ---- realize ----
    std::string r_target;
    long long r_budget = 20'000'000'000;
    auto* rea =
        app.add_subcommand("realize", "First witness of one class triple");
    rea->add_option("--target", r_target, "I,J,K")->required();
    rea->add_option("--budget", r_budget, "enumeration-step budget");

    // ---- family ----
    std::string f_family = "plumbing", f_base, f_modulus;
    int f_count = 1;
    bool f_certify = false;
    auto* fam = app.add_subcommand(
        "family", "Congruence family of witnesses through a base");
    fam->add_option("--family", f_family, "plumbing|cp2")
        ->check(CLI::IsMember({"plumbing", "cp2"}));
    fam->add_option("--base", f_base,
                    "a1,a2,a3,lambda,mu (plumbing) or alpha,lambda,mu (cp2)")
        ->required();
    fam->add_option("--modulus", f_modulus, "congruence modulus T");
    fam->add_option("--count", f_count)->required();
    fam->add_flag("--certify", f_certify);

    // ---- classify ----
    bool c_report = false, c_json = false;
    std::string c_class;
    auto* cla = app.add_subcommand("classify", "Census of the 672 classes");
    cla->add_flag("--report", c_report);
    cla->add_flag("--json", c_json);
    cla->add_option("--class", c_class, "I,J,K");

    // ---- verify-tables ----
    std::string v_data = S2S5_DATA_DIR;
    auto* ver = app.add_subcommand("verify-tables",
                                   "Recompute the bundled golden tables");
    ver->add_option("--data", v_data, "directory with table1..3.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (inv_pl->parsed()) {
        auto a = parse_int_list(alpha_str, 3, "--alpha");
        auto e = parse_int_list(euler_str, 2, "--euler");
        print_invariants(chardata_plumbing(a[0], a[1], a[2], e[0], e[1]),
                         show_cd);
        return 0;
    }
    if (inv_cp->parsed()) {
        auto a = parse_int_list(alpha_str, 1, "--alpha");
        auto e = parse_int_list(euler_str, 2, "--euler");
        print_invariants(chardata_cp2(a[0], e[0], e[1]), show_cd);
        return 0;
    }
    if (inv_dir->parsed()) {
        if (d_spin == d_nonspin) {
            std::cerr << "exactly one of --spin/--nonspin is required\n";
            return 2;
        }
        print_invariants(chardata_direct(Int(dA), Int(dB), Int(dC), Int(dD),
                                         Int(du), Int(dv), d_spin),
                         true);
        return 0;
    }

    if (sea->parsed()) {
#ifdef _OPENMP
        if (s_jobs > 0) omp_set_num_threads(s_jobs);
#endif
        SearchBox box;
        box.family = (s_family == "cp2") ? Family::Cp2 : Family::Plumbing;
        box.alpha_bound = s_abound;
        box.euler_bound = s_ebound;
        if (!s_targets.empty()) {
            std::set<DiffeoClass> targets;
            if (s_targets == "all") {
                for (int i = 0; i < 28; ++i)
                    for (int j = 0; j < 12; ++j)
                        for (int k = 0; k < 2; ++k)
                            targets.insert({i, j, k});
            } else {
                std::ifstream in(s_targets);
                if (!in) {
                    std::cerr << "cannot open targets file " << s_targets
                              << "\n";
                    return 2;
                }
                std::string line;
                while (std::getline(in, line)) {
                    if (line.empty()) continue;
                    auto t = parse_int_list(line, 3, "--targets");
                    targets.insert({static_cast<int>(t[0]),
                                    static_cast<int>(t[1]),
                                    static_cast<int>(t[2])});
                }
            }
            CoverageReport rep = coverage(box, targets);
            for (const auto& [c, w] : rep.first_witness) {
                std::cout << c.i << "," << c.j << "," << c.k << " <- "
                          << params_csv(w.params) << "\n";
            }
            for (const auto& c : rep.unhit) {
                std::cout << c.i << "," << c.j << "," << c.k << " unhit\n";
            }
            std::cout << "# hit " << rep.first_witness.size() << ", unhit "
                      << rep.unhit.size() << "\n";
            return rep.unhit.empty() ? 0 : 1;
        }
        auto ws = enumerate_witnesses(box);
        if (s_emit == "csv") {
            std::cout << (box.family == Family::Cp2
                              ? "alpha,lambda,mu,s1_28,s2_12,s3t_2"
                              : "alpha1,alpha2,alpha3,lambda,mu,s1_28,s2_12,"
                                "s3t_2")
                      << "\n";
            for (const auto& w : ws) {
                DiffeoClass c = w.triple();
                std::cout << params_csv(w.params) << "," << c.i << "," << c.j
                          << "," << c.k << "\n";
            }
        } else {
            for (const auto& w : ws) {
                DiffeoClass c = w.triple();
                std::cout << params_csv(w.params) << " -> (" << c.i << ","
                          << c.j << "," << c.k << ")\n";
            }
            std::cout << "# " << ws.size() << " witnesses\n";
        }
        return 0;
    }

    if (rea->parsed()) {
        auto t = parse_int_list(r_target, 3, "--target");
        DiffeoClass target{static_cast<int>(t[0]), static_cast<int>(t[1]),
                           static_cast<int>(t[2])};
        try {
            Witness w = realize_target(target, r_budget);
            const char* fam_name = w.family == Family::Plumbing ? "plumbing"
                                   : w.family == Family::Cp2    ? "cp2"
                                                                : "direct";
            std::cout << fam_name << " " << params_csv(w.params) << "\n";
            return 0;
        } catch (const NoActionError& e) {
            std::cout << "no action exists: " << e.what() << "\n";
            return 1;
        } catch (const BudgetExhaustedError& e) {
            std::cout << "budget exhausted: " << e.what() << "\n";
            return 1;
        }
    }

    if (fam->parsed()) {
        const bool cp2 = (f_family == "cp2");
        auto base_params = parse_int_list(f_base, cp2 ? 3 : 5, "--base");
        FamilySpec spec;
        spec.base.family = cp2 ? Family::Cp2 : Family::Plumbing;
        spec.base.params = base_params;
        spec.base.cd =
            cp2 ? chardata_cp2(base_params[0], base_params[1], base_params[2])
                : chardata_plumbing(base_params[0], base_params[1],
                                    base_params[2], base_params[3],
                                    base_params[4]);
        spec.base.inv = s_invariants(spec.base.cd);
        spec.modulus = f_modulus.empty() ? default_modulus() : Int(f_modulus);
        if (f_certify) {
            CertificationReport rep = certify_family(spec, f_count);
            std::cout << "branch=" << branch_name(rep.branch) << " members="
                      << rep.members.size() << " ok=" << (rep.ok ? 1 : 0)
                      << "\n";
            for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
            for (const auto& mem : rep.members) {
                std::cout << "m=" << mem.m << " " << params_csv(mem.params)
                          << " -> (" << mem.triple.i << "," << mem.triple.j
                          << "," << mem.triple.k << ")\n";
            }
            return rep.ok ? 0 : 1;
        }
        DiffeoClass base_c = spec.base.triple();
        for (int m = 0; m < f_count; ++m) {
            FamilyBranch br;
            auto p = cp2 ? family_cp2(spec, m, &br)
                         : family_plumbing(spec, m, &br);
            std::cout << "m=" << m << " " << params_csv(p) << " -> ("
                      << base_c.i << "," << base_c.j << "," << base_c.k
                      << ") [" << branch_name(br) << "]\n";
        }
        return 0;
    }

    if (cla->parsed()) {
        if (!c_class.empty()) {
            auto t = parse_int_list(c_class, 3, "--class");
            DiffeoClass c{static_cast<int>(t[0]), static_cast<int>(t[1]),
                          static_cast<int>(t[2])};
            if (c.i < 0 || c.i > 27 || c.j < 0 || c.j > 11 || c.k < 0 ||
                c.k > 1) {
                std::cerr << "class out of range\n";
                return 2;
            }
            ActionFlags f = admits_free_action(c);
            RicciStatus r = ricci_status(c);
            ClassAttributes a = class_attributes(c);
            std::cout << "class=(" << c.i << "," << c.j << "," << c.k << ")\n"
                      << "spin_quotient=" << f.spin_quotient
                      << " nonspin_quotient=" << f.nonspin_quotient << "\n"
                      << "ricci="
                      << (r == RicciStatus::KnownPositive ? "known-positive"
                          : r == RicciStatus::Open        ? "open"
                                                          : "no-action")
                      << "\n"
                      << "pi4=" << (a.pi4 == Pi4::Z2 ? "Z/2" : "0") << "\n"
                      << "homeo_id=(" << a.homeo_id[0] << "," << a.homeo_id[1]
                      << ") homotopy_id=(" << a.homotopy_id[0] << ","
                      << a.homotopy_id[1] << ")\n"
                      << "reversed=(" << a.reversed.i << "," << a.reversed.j
                      << "," << a.reversed.k << ")\n";
            return 0;
        }
        CensusReport rep = census();
        std::cout << (c_json ? rep.json() : rep.text());
        return 0;
    }

    if (ver->parsed()) {
        namespace fs2 = std::filesystem;
        bool all_ok = true;
        size_t total = 0;
        for (TableKind kind :
             {TableKind::PlumbingDetMinus1, TableKind::PlumbingDetPlus1,
              TableKind::Cp2}) {
            fs2::path p = fs2::path(v_data) / table_filename(kind);
            GoldenTable t = load_table(p, kind);
            VerificationReport rep = verify_table(t);
            total += rep.passed;
            std::cout << table_filename(kind) << ": " << rep.passed << "/"
                      << t.rows.size() << " rows verified\n";
            for (const auto& f : rep.failures) {
                std::cout << "  row " << f.row << ": expected (" << f.expected.i
                          << "," << f.expected.j << "," << f.expected.k
                          << ") computed (" << f.computed.i << ","
                          << f.computed.j << "," << f.computed.k << ")\n";
            }
            all_ok = all_ok && rep.ok();
        }
        std::cout << (all_ok ? "OK" : "FAILED") << " (" << total
                  << " rows)\n";
        return all_ok ? 0 : 1;
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
