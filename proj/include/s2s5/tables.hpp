#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "s2s5/chardata.hpp"
#include "s2s5/census.hpp"

namespace s2s5 {

enum class TableKind {
    PlumbingDetMinus1,  // table1.csv: 252 rows, det = -1
    PlumbingDetPlus1,   // table2.csv: 252 rows, det = +1
    Cp2,                // table3.csv: 63 rows
};

struct GoldenRow {
    std::vector<Int> params;  // (a1,a2,a3,lambda,mu) or (alpha,lambda,mu)
    DiffeoClass expected;     // (28 s1, 12 s2, 2 s3~)
};

struct GoldenTable {
    TableKind kind;
    std::vector<GoldenRow> rows;
};

// Strict CSV parse: exact header, integer fields, expected row count,
// pairwise-distinct expected triples. Throws std::runtime_error on any
// violation.
GoldenTable load_table(const std::filesystem::path& path, TableKind kind);

struct RowResult {
    size_t row;
    bool pass;
    DiffeoClass expected;
    DiffeoClass computed;
};

struct VerificationReport {
    size_t passed = 0;
    size_t failed = 0;
    std::vector<RowResult> failures;

    bool ok() const { return failed == 0; }
};

// Recomputes characteristic data and s-invariants from each row's
// parameters and compares (28 s1, 12 s2, 2 s3~) exactly; the det sign is
// checked against the table's family.
VerificationReport verify_table(const GoldenTable& t);

// Conventional file name for each table kind (table1.csv, ...).
std::string table_filename(TableKind kind);

}  // namespace s2s5
