#pragma once

#include <string>
#include <vector>

#include "scring/rational.hpp"
#include "scring/report.hpp"
#include "scring/scring.hpp"

namespace scring {

// Minimal central idempotents pi_1..pi_3 and the central idempotent pi_4
// that carries the 2x2 matrix block; exact transcriptions.
RVec7 pi(int i, int64_t q);

// The matrix units M_{1,1}, M_{1,2}, M_{2,1}, M_{2,2} splitting pi_4. The two
// off-diagonal units have different denominators (2(q-1)^2 vs 2(q^2-1));
// they are kept exactly as displayed and validated through their relations.
RVec7 matrix_unit(int i, int j, int64_t q);

// The scalar lambda with idem * x = lambda * idem; throws NotRankOne when the
// product is not a scalar multiple, i.e. idem does not span a 1-dimensional
// ideal hit by x.
Rational character_value(const StructureTable& t, const RVec7& idem, const RVec7& x,
                         int64_t q);
Rational character_value(const StructureTable& t, const RVec7& idem, SupportClass x,
                         int64_t q);

enum class SubalgebraKind { Rank5, Rank4, Rank3 };

// A commutative subalgebra presented by its minimal idempotents and by a
// reduced generating basis (combined classes D=D+ + D-, E=E+ + E-, F=D+E,
// I=A+B where applicable). The unit is the identity of the subalgebra, not
// necessarily of the whole ring.
struct IdempotentSystem {
    SubalgebraKind kind;
    std::vector<std::string> member_names;
    std::vector<RVec7> members;
    std::vector<std::string> basis_names;
    std::vector<RVec7> basis;
    RVec7 unit;
};

IdempotentSystem subalgebra_system(SubalgebraKind kind, int64_t q);

// Fusion constants of the rank-3 subalgebra after the unitary rescaling
// I~ = I/(2(q-1)), C~ = C/sqrt(2(q-1)^3(q-2)), F~ = F/sqrt(8(q-1)^3).
// Index order: 0 = I~, 1 = C~, 2 = F~. The squares are exact rationals; the
// double values are their nonnegative square roots.
struct FusionTensor {
    double value[3][3][3];
    Rational square[3][3][3];
};

FusionTensor fusion_constants(int64_t q);

// Trace of pi_i on the regular representation of the group algebra:
// (q^3 - q) times the coefficient of A.
Rational projector_trace(int i, int64_t q);

// Verifies the 16 matrix-unit relations with every coefficient reduced
// modulo r, which establishes the 2x2 matrix embedding over F_r without
// building any group of size r. r must be a prime power coprime to
// 2(q^2-1), otherwise NotCoprime (or InvalidSpec for a non prime power).
Report embedding_relations_check(int64_t q, int64_t r);

// Full Wedderburn-structure battery: idempotency, orthogonality, centrality,
// sum to identity, the three characters, the 16 matrix-unit relations, the
// two displayed non-central projectors with their B-eigenvalues, and the
// dimension count 1+1+1+4.
Report verify_semisimple_structure(const StructureTable& t, int64_t q);

// Checks one subalgebra system: idempotents, orthogonality, sum = unit, the
// closed-form character table, and for rank 3 the four displayed products.
Report verify_subalgebra_tables(SubalgebraKind kind, int64_t q);

// Fusion tensor symmetry (1e-12), exact agreement of the squared constants
// with their closed forms, and the {0,1} degeneration at q=3.
Report verify_fusion(int64_t q);

}  // namespace scring
