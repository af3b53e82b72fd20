#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "scring/rational.hpp"
#include "scring/report.hpp"
#include "scring/sl2.hpp"

namespace scring {

// Partitions of SL2 into unions of support classes, with the identity split
// off: the 6-class partition, the two merged variants, and the 4-class
// partition studied in detail (same cells as Merged12_45, tilde labels).
enum class SchemeVariant { D5, Merged45, Merged12_45, Tilde };

const char* variant_name(SchemeVariant v);

struct SchemeClass {
    std::string label;
    std::vector<int32_t> mat;  // n*n row-major 0/1 adjacency, (u,v) = [u v^-1 in cell]
};

struct SchemeStructure {
    int64_t q = 0;
    SchemeVariant variant{};
    int64_t n = 0;
    std::vector<SchemeClass> classes;
    // constants[i][j][k]: C_i C_j = sum_k constants[i][j][k] C_k, extracted
    // from the explicit matrix products.
    std::vector<std::vector<std::vector<int64_t>>> constants;
};

// Builds the adjacency matrices over the deterministic SL2 enumeration and
// extracts every structure constant by an exact matrix product. Throws
// UnsupportedField for q < 4 and Error if some product fails to close.
SchemeStructure build_scheme(int64_t q, SchemeVariant variant);

// Axioms from the matrices alone: identity class, 0/1 entries, partition of
// the all-ones matrix, symmetry, closure with integral constants, and
// commutativity. Never throws on a bad scheme; failures carry witnesses.
Report verify_axioms(const SchemeStructure& s);

// Closed-form structure constants: the 6-class table and the 4-class table
// are transcriptions; the merged variants are derived by merging the 6-class
// table cell-wise.
std::vector<std::vector<std::vector<int64_t>>> expected_constants(int64_t q,
                                                                  SchemeVariant variant);

// 4x4 multiplication matrices of the 4-class scheme; column i of matrix j
// holds the coefficients of C~j * C~i over C~0..C~3.
using Mat4 = std::array<std::array<int64_t, 4>, 4>;
std::array<Mat4, 4> tilde_mult_matrices(int64_t q);

// Minimal idempotents of the 4-class scheme as coefficient vectors over
// C~0..C~3, their eigenvalue table, and the eigenspace dimensions.
struct BetaSystem {
    std::array<std::array<Rational, 4>, 4> beta;
    std::array<std::array<int64_t, 4>, 4> eigen;  // eigen[i][j]: C~j on beta_i
    std::array<int64_t, 4> dims;
};

BetaSystem beta_system(int64_t q);

// Axioms plus extracted-vs-closed-form constants for one variant; for D5
// also the check that C1 does not square like the scalar (q-2).
Report verify_scheme(int64_t q, SchemeVariant variant);

// Beta certificates: idempotency, orthogonality, sum, eigenvalue table, and
// dimensions in the exact coefficient algebra, then matrix-level kernel
// witnesses for every claimed (class, eigenvalue) pair at this q.
Report verify_beta(int64_t q);

// Negative-control fixture: clears one adjacency entry so the partition and
// symmetry axioms fail with a witness.
void corrupt_drop_pair(SchemeStructure& s, int class_index, int64_t u, int64_t v);

}  // namespace scring
