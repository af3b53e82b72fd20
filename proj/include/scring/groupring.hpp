#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "scring/rational.hpp"
#include "scring/sl2.hpp"

namespace scring {

// Dense integer element of the group algebra Z[G]. All arithmetic is
// overflow-checked; the group table is referenced, not owned, and two vectors
// may only be combined when they point at the same table object.
class GroupVec {
public:
    explicit GroupVec(const GroupTable& g) : g_(&g), c_(g.n(), 0) {}

    const GroupTable& group() const { return *g_; }
    int64_t size() const { return static_cast<int64_t>(c_.size()); }

    int64_t& operator[](int64_t i) { return c_[i]; }
    int64_t operator[](int64_t i) const { return c_[i]; }

    GroupVec& operator+=(const GroupVec& o);
    GroupVec& operator-=(const GroupVec& o);
    GroupVec& operator*=(int64_t s);
    GroupVec operator+(const GroupVec& o) const {
        GroupVec r = *this;
        return r += o;
    }
    GroupVec operator-(const GroupVec& o) const {
        GroupVec r = *this;
        return r -= o;
    }
    GroupVec operator*(int64_t s) const {
        GroupVec r = *this;
        return r *= s;
    }

    bool operator==(const GroupVec& o) const;
    bool operator!=(const GroupVec& o) const { return !(*this == o); }

    bool is_zero() const;

    // Sum of coefficients; the image under the map sending every group
    // element to 1, which turns convolution into integer multiplication.
    int64_t augmentation() const;

private:
    void check_same(const GroupVec& o) const;

    const GroupTable* g_;
    std::vector<int64_t> c_;
};

// Convolution product: (x*y)[gh] += x[g] y[h], restricted to nonzero support.
GroupVec convolve(const GroupVec& x, const GroupVec& y);

// Indicator sum of the table's own elements with the given zero pattern.
GroupVec class_sum(const GroupTable& g, SupportClass s);

// Indicator sum, inside a larger table, of the determinant-1 elements with
// the given zero pattern: the image of a support class under the inclusion
// SL2 -> G.
GroupVec embedded_class_sum(const GroupTable& g, SupportClass s);

// Sum of diag(1, t) over all t != 0; a transversal of SL2 in GL2 by
// determinant. The table must contain those matrices.
GroupVec diagonal_f(const GroupTable& g);

struct SupportDecomposition {
    bool ok = false;
    std::array<int64_t, kNumSupports> coeffs{};
    // On failure: two element indices with equal zero pattern but different
    // coefficients.
    int64_t witness_a = -1;
    int64_t witness_b = -1;
};

// Tries to express v as an integer combination of the seven support-class
// sums of its group.
SupportDecomposition decompose_support(const GroupVec& v);

using SupportProducts =
    std::array<std::array<SupportDecomposition, kNumSupports>, kNumSupports>;

// All 49 pairwise products of support-class sums, decomposed again over the
// support classes. This is the brute-force reference path: it never touches
// the closed-form structure table.
SupportProducts support_product_table(const GroupTable& g);

// A rational multiple of an integer group-algebra element, kept as
// (scale, integer vector) so convolution stays exact.
struct ScaledVec {
    GroupVec vec;
    Rational scale;

    Rational coeff(int64_t i) const { return scale * Rational(vec[i]); }
};

ScaledVec convolve(const ScaledVec& x, const ScaledVec& y);
ScaledVec add(const ScaledVec& x, const ScaledVec& y);
bool equal(const ScaledVec& x, const ScaledVec& y);

}  // namespace scring
