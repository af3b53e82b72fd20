#pragma once

#include <cstdint>
#include <vector>

#include "scring/report.hpp"
#include "scring/scring.hpp"

namespace scring {

// Knobs for the aggregated verification run. Caps bound the brute-force
// group sizes; fault flags wire the negative-control fixtures into the run.
struct OracleConfig {
    std::vector<int64_t> qs{3, 4, 5, 7};
    int64_t groupring_cap = 9;  // largest q whose group ring is brute-forced
    int64_t scheme_cap = 7;     // largest q whose scheme matrices are built
    int64_t seed = 12345;       // drives the conjugation spot-checks
    bool corrupt_structure = false;  // perturb one structure constant
    bool corrupt_scheme = false;     // drop one adjacency pair
};

// All 49 brute-force class-sum products against the given closed-form table.
// The brute path shares nothing with the table: products are convolved in
// Z[SL2] and decomposed by zero pattern.
Report verify_product_table(int64_t q, const StructureTable& table = structure_table());

// Rank-1 n x n matrices over F_q grouped by their nonzero row and column
// patterns: the (2^n-1)^2 class sums span a ring with constant nonnegative
// integer coefficients once the zero matrix is identified with 0. Desk
// scale: n in {2,3}, q in {2,3}.
Report rank1_support_ring_check(int n, int64_t q);

// Why the construction stops at invertible matrices: the product of the
// (a,c nonzero | b,d zero) and (a,b nonzero | c,d zero) sums in the full
// matrix algebra is (q-1) times the sum of all (q-1)^3 rank-1 matrices with
// four nonzero entries, which no combination of invertible-support classes
// can reach. q in {3,4,5}.
Report gl2_rank1_counterexample(int64_t q);

// Every verification battery in the library over config.qs, aggregated into
// one report. Deterministic for a fixed config; the seed only feeds the
// conjugation spot-checks and is echoed in the report. Throws ConfigError
// for q <= 2 or a non prime power in the list.
Report run_full_suite(const OracleConfig& config);

}  // namespace scring
