#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "scring/groupring.hpp"
#include "scring/rational.hpp"
#include "scring/report.hpp"
#include "scring/sl2.hpp"

namespace scring {

enum class IrrepFamily : int { U = 0, V, W, X };

// Irreducible of GL2(F_q), parameterized by character exponents against the
// canonical field generators: U(e) and V(e) use e mod q-1; W(e1,e2) needs
// e1 != e2 mod q-1 and is symmetric in the pair; X(e) uses e mod q^2-1 and
// needs (q+1) not dividing e, with X(e) isomorphic to X(e*q).
struct IrrepSpec {
    IrrepFamily family = IrrepFamily::U;
    int64_t e1 = 0;
    int64_t e2 = 0;

    int64_t dim(int64_t q) const;
    std::string name() const;

    bool operator==(const IrrepSpec& o) const {
        return family == o.family && e1 == o.e1 && e2 == o.e2;
    }
};

// GL2 group data plus the full list of irreducibles and their values on
// conjugacy classes. Values are complex doubles; exponent bookkeeping is
// exact, so the only rounding is in the final exp().
class CharTable {
public:
    explicit CharTable(int64_t q);
    CharTable(const CharTable&) = delete;
    CharTable& operator=(const CharTable&) = delete;

    int64_t q() const { return q_; }
    const GroupTable& group() const { return g_; }
    const ConjClasses& classes() const { return cc_; }

    // Every irreducible exactly once: q-1 each of types U and V,
    // (q-1)(q-2)/2 of type W, (q^2-q)/2 of type X.
    const std::vector<IrrepSpec>& irreps() const { return irreps_; }

    // Throws InvalidSpec on out-of-range exponents, W with equal characters,
    // or X whose character has trivial (q-1)-st power.
    void validate(const IrrepSpec& s) const;
    bool isomorphic(const IrrepSpec& a, const IrrepSpec& b) const;

    // Character value on the conjugacy class with this index; accepts any
    // valid spec, canonical or not.
    std::complex<double> value(const IrrepSpec& s, int64_t cls) const;

    // Exponent of the quadratic residue character (odd q).
    int64_t legendre_exponent() const;

    // Degree q+1 irreducibles W(e,-e) with non-real e, one per conjugate
    // pair; these are the W's whose mean over a support class can be nonzero.
    std::vector<IrrepSpec> relevant_w() const;
    // Degree q-1 irreducibles X(e) with e a multiple of q-1, i.e. trivial on
    // the embedded F_q^*, one per Frobenius pair.
    std::vector<IrrepSpec> relevant_x() const;

    // Sign of X's character on a trace-zero unit (odd q).
    int sigma_of(const IrrepSpec& s) const;
    // alpha(-1) for W(e,-e) (odd q).
    int alpha_minus_one(const IrrepSpec& s) const;

private:
    int64_t q_;
    GroupTable g_;
    ConjClasses cc_;
    std::vector<IrrepSpec> irreps_;
};

// Total coefficient of e over one conjugacy class of each refined type.
// Throws NotTypeConstant when two classes of the same type disagree, and
// GroupMismatch when e lives over a different table. Types without classes
// (the starred ones for even q) are absent from the result.
std::map<RefinedType, int64_t> class_profile_sum(const CharTable& t, const GroupVec& e);

// Rational counterpart for scaled elements; disagreement between classes of
// one type throws NotPointwiseConstant naming both class representatives.
std::map<RefinedType, Rational> class_profile_pointwise(const CharTable& t, const ScaledVec& e);

// pi~_i = (1/(q-1)) pi_i F as an exact scaled group-algebra element over GL2.
ScaledVec pi_tilde(const CharTable& t, int i);

// Trace of e in the irreducible: sum of coeff(g) * chi(g) over the group,
// snapped to a nonnegative integer; NotNearInteger beyond 1e-6. For an
// idempotent e this counts the copies of the irreducible in its image.
int64_t rank_in_irrep(const CharTable& t, const ScaledVec& e, const IrrepSpec& spec);

// Row orthogonality and the dimension-square sum for the whole table.
Report character_orthogonality(int64_t q);

// Per-type totals of F*X for all seven support classes X against the closed
// forms, plus the margin row (totals across all X reproduce class sizes).
Report fx_profile_check(int64_t q);

// Per-type totals of pi~_1..pi~_4: always against the combination of the FX
// closed forms with the pi coefficients, and for odd q additionally against
// the directly tabulated values.
Report pi_tilde_profile_check(int64_t q);

// Ranks of every pi~_i in every irreducible against the predicted placement
// (trivial, V, and the alpha(-1)/sigma splits of W and X), family totals,
// per-projector regular traces, and the relevant-character counts.
Report decomposition_report(int64_t q);

// Means of V_L, W(alpha,conj alpha), and X_phi over the classes of each
// refined type against the closed-form rows; odd q >= 5.
Report mean_values_check(int64_t q);

}  // namespace scring
