#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <tuple>
#include <vector>

#include "scring/gf.hpp"

namespace scring {

// 2x2 matrix over a finite field; entries are element indices.
struct Mat2 {
    int32_t a, b, c, d;

    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

// The seven zero patterns an invertible 2x2 matrix can have, in the basis
// order used throughout: diagonal, antidiagonal, dense, then one zero at
// position c, b, d, a respectively.
enum class SupportClass : int { A = 0, B, C, Dp, Dm, Ep, Em };

inline constexpr int kNumSupports = 7;
inline constexpr std::array<const char*, kNumSupports> kSupportNames{
    "A", "B", "C", "D+", "D-", "E+", "E-"};

inline constexpr int idx(SupportClass s) { return static_cast<int>(s); }

// Classifies the zero pattern; throws UnreachablePattern on a pattern no
// invertible matrix can have (caller is expected to pass invertible input).
SupportClass support_of(const Mat2& m);

enum class GroupKind { SL2, PSL2, GL2, DetSubgroup };

// Dense multiplication table-free group model: elements are enumerated in
// lexicographic (a,b,c,d) order, products are computed entrywise and located
// through a q^4 code-to-index map. PSL2 (odd q) keeps the lexicographically
// smaller of {M, -M} and maps both codes to that representative.
class GroupTable {
public:
    // det_order: order of the determinant subgroup of F_q^*; only read for
    // GroupKind::DetSubgroup where it must divide q-1 (1 gives SL2, q-1 GL2).
    GroupTable(const Field& f, GroupKind kind, int64_t det_order = 1);

    const Field& field() const { return f_; }
    GroupKind kind() const { return kind_; }
    int64_t n() const { return static_cast<int64_t>(elems_.size()); }

    const Mat2& mat(int64_t i) const { return elems_[i]; }
    int64_t identity() const { return identity_; }
    int64_t inverse(int64_t i) const { return inv_[i]; }
    SupportClass support(int64_t i) const { return static_cast<SupportClass>(support_[i]); }

    int64_t mul(int64_t i, int64_t j) const {
        const Mat2& x = elems_[i];
        const Mat2& y = elems_[j];
        Mat2 r{
            static_cast<int32_t>(f_.add(f_.mul(x.a, y.a), f_.mul(x.b, y.c))),
            static_cast<int32_t>(f_.add(f_.mul(x.a, y.b), f_.mul(x.b, y.d))),
            static_cast<int32_t>(f_.add(f_.mul(x.c, y.a), f_.mul(x.d, y.c))),
            static_cast<int32_t>(f_.add(f_.mul(x.c, y.b), f_.mul(x.d, y.d)))};
        return code_to_idx_[pack(r)];
    }

    int64_t det(int64_t i) const {
        const Mat2& m = elems_[i];
        return f_.sub(f_.mul(m.a, m.d), f_.mul(m.b, m.c));
    }
    int64_t trace(int64_t i) const {
        const Mat2& m = elems_[i];
        return f_.add(m.a, m.d);
    }

    int64_t pack(const Mat2& m) const {
        const int64_t q = f_.q();
        return ((static_cast<int64_t>(m.a) * q + m.b) * q + m.c) * q + m.d;
    }

    // Index of a matrix (or, for PSL2, of its class); throws GroupMismatch
    // when the matrix is not a member.
    int64_t index_of(const Mat2& m) const;

private:
    Field f_;
    GroupKind kind_;
    int64_t det_order_;
    int64_t identity_ = 0;
    std::vector<Mat2> elems_;
    std::vector<int32_t> code_to_idx_;
    std::vector<int32_t> inv_;
    std::vector<int8_t> support_;
};

// Families of invertible conjugacy classes, split by characteristic
// polynomial: scalar, non-semisimple with one eigenvalue, two distinct
// eigenvalues in GF(q), eigenvalues in GF(q^2) \ GF(q).
enum class ClassFamily : int { Central = 0, Unipotent, Split, Irreducible };

// Finer partition used by trace and mean-value bookkeeping. For even q the
// two starred kinds are empty and the partition degenerates to one refined
// type per family.
enum class RefinedType : int {
    Central = 0,
    Unipotent,
    SplitOpposite,           // eigenvalues {x, -x}, odd q only (*)
    SplitGeneric,            // eigenvalues {x, y}, y != +-x
    IrreducibleTraceZero,    // odd q only (*)
    IrreducibleTraceNonzero,
};

inline constexpr int kNumRefined = 6;

inline constexpr int idx(RefinedType t) { return static_cast<int>(t); }

// Display label; the even-q partition collapses to a/b/c/d.
const char* refined_label(RefinedType t, bool odd_q);

struct ConjClassInfo {
    ClassFamily family;
    RefinedType refined;
    // Central/Unipotent: u = the eigenvalue. Split: u < v the two
    // eigenvalues. Irreducible: u = extension-field index of the orbit
    // representative root (the smaller of the two conjugates).
    int64_t u = 0;
    int64_t v = 0;
    int64_t size = 0;
    int64_t rep = -1;  // element index of one member
};

// Conjugacy classes of a GL2 group table, identified through characteristic
// polynomial roots rather than orbit sweeps. Keeps the defining table by
// reference; it must outlive this object.
class ConjClasses {
public:
    explicit ConjClasses(const GroupTable& g);

    const GroupTable& group() const { return g_; }
    const ExtField& ext() const { return ext_; }

    int64_t num_classes() const { return static_cast<int64_t>(info_.size()); }
    const ConjClassInfo& info(int64_t c) const { return info_[c]; }
    int64_t class_of(int64_t elem) const { return class_of_[elem]; }

    // Exact label lookup; throws GroupMismatch when no class carries it.
    int64_t find_class(ClassFamily fam, int64_t u, int64_t v = 0) const;

    std::array<int64_t, kNumRefined> refined_class_counts() const;

private:
    const GroupTable& g_;
    ExtField ext_;
    std::vector<ConjClassInfo> info_;
    std::vector<int32_t> class_of_;
    std::map<std::tuple<int, int64_t, int64_t>, int64_t> by_label_;
};

}  // namespace scring
