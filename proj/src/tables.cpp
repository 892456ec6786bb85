#include "s2s5/tables.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace s2s5 {
namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) out.push_back(field);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

Int parse_int(const std::string& s, size_t row, const std::string& col) {
    if (s.empty()) {
        throw std::runtime_error("malformed row " + std::to_string(row) +
                                 ": empty field " + col);
    }
    size_t pos = 0;
    if (s[pos] == '-' || s[pos] == '+') ++pos;
    if (pos == s.size()) {
        throw std::runtime_error("malformed row " + std::to_string(row) +
                                 ": bad integer in " + col);
    }
    for (size_t k = pos; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) {
            throw std::runtime_error("malformed row " + std::to_string(row) +
                                     ": bad integer in " + col);
        }
    }
    return Int(s);
}

int parse_small(const std::string& s, size_t row, const std::string& col,
                int lo, int hi) {
    Int v = parse_int(s, row, col);
    if (v < lo || v > hi) {
        throw std::runtime_error("malformed row " + std::to_string(row) + ": " +
                                 col + " out of range");
    }
    return static_cast<int>(v);
}

}  // namespace

std::string table_filename(TableKind kind) {
    switch (kind) {
        case TableKind::PlumbingDetMinus1: return "table1.csv";
        case TableKind::PlumbingDetPlus1: return "table2.csv";
        case TableKind::Cp2: return "table3.csv";
    }
    throw std::invalid_argument("unknown table kind");
}

GoldenTable load_table(const std::filesystem::path& path, TableKind kind) {
    const bool cp2 = (kind == TableKind::Cp2);
    const std::string expected_header =
        cp2 ? "alpha,lambda,mu,s1_28,s2_12,s3t_2"
            : "alpha1,alpha2,alpha3,lambda,mu,s1_28,s2_12,s3t_2";
    const size_t expected_rows = cp2 ? 63 : 252;
    const size_t nparams = cp2 ? 3 : 5;

    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open table file: " + path.string());
    }

    std::string line;
    if (!std::getline(in, line) || line != expected_header) {
        throw std::runtime_error("bad header in " + path.string());
    }

    static const char* kColNames[] = {"alpha1", "alpha2", "alpha3",
                                      "lambda", "mu"};
    static const char* kColNamesCp2[] = {"alpha", "lambda", "mu"};

    GoldenTable t;
    t.kind = kind;
    std::set<DiffeoClass> seen;
    size_t rowno = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++rowno;
        auto fields = split_csv(line);
        if (fields.size() != nparams + 3) {
            throw std::runtime_error("malformed row " + std::to_string(rowno) +
                                     ": expected " +
                                     std::to_string(nparams + 3) + " fields");
        }
        GoldenRow r;
        for (size_t k = 0; k < nparams; ++k) {
            r.params.push_back(parse_int(
                fields[k], rowno, cp2 ? kColNamesCp2[k] : kColNames[k]));
        }
        r.expected.i = parse_small(fields[nparams], rowno, "s1_28", 0, 27);
        r.expected.j = parse_small(fields[nparams + 1], rowno, "s2_12", 0, 11);
        r.expected.k = parse_small(fields[nparams + 2], rowno, "s3t_2", 0, 1);
        if (!seen.insert(r.expected).second) {
            throw std::runtime_error("duplicate expected class at row " +
                                     std::to_string(rowno));
        }
        t.rows.push_back(std::move(r));
    }
    if (t.rows.size() != expected_rows) {
        throw std::runtime_error(
            "row count mismatch in " + path.string() + ": expected " +
            std::to_string(expected_rows) + ", got " +
            std::to_string(t.rows.size()));
    }
    return t;
}

VerificationReport verify_table(const GoldenTable& t) {
    const int want_det = (t.kind == TableKind::PlumbingDetPlus1) ? 1 : -1;
    VerificationReport rep;
    for (size_t k = 0; k < t.rows.size(); ++k) {
        const auto& r = t.rows[k];
        RowResult rr;
        rr.row = k + 1;
        rr.expected = r.expected;
        rr.pass = false;
        try {
            CharData cd =
                (t.kind == TableKind::Cp2)
                    ? chardata_cp2(r.params[0], r.params[1], r.params[2])
                    : chardata_plumbing(r.params[0], r.params[1], r.params[2],
                                        r.params[3], r.params[4]);
            if (cd.det != want_det) {
                throw std::runtime_error("wrong det sign");
            }
            rr.computed = class_of(s_invariants(cd));
            rr.pass = (rr.computed == rr.expected);
        } catch (const std::exception&) {
            rr.pass = false;
        }
        if (rr.pass) {
            ++rep.passed;
        } else {
            ++rep.failed;
            rep.failures.push_back(rr);
        }
    }
    return rep;
}

}  // namespace s2s5
