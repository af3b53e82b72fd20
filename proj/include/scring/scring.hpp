#pragma once

#include <array>
#include <string>
#include <vector>

#include "scring/groupring.hpp"
#include "scring/qpoly.hpp"
#include "scring/rational.hpp"
#include "scring/report.hpp"
#include "scring/sl2.hpp"

namespace scring {

// Coefficient vectors in the fixed basis order A,B,C,D+,D-,E+,E-.
using IVec7 = std::array<int64_t, kNumSupports>;
using RVec7 = std::array<Rational, kNumSupports>;
using Mat7 = std::array<std::array<int64_t, kNumSupports>, kNumSupports>;

inline IVec7 basis_vec(SupportClass s) {
    IVec7 v{};
    v[idx(s)] = 1;
    return v;
}

inline RVec7 to_rational(const IVec7& v) {
    RVec7 r;
    for (int i = 0; i < kNumSupports; ++i) r[i] = Rational(v[i]);
    return r;
}

inline RVec7 operator+(const RVec7& a, const RVec7& b) {
    RVec7 r;
    for (int i = 0; i < kNumSupports; ++i) r[i] = a[i] + b[i];
    return r;
}

inline RVec7 operator-(const RVec7& a, const RVec7& b) {
    RVec7 r;
    for (int i = 0; i < kNumSupports; ++i) r[i] = a[i] - b[i];
    return r;
}

inline RVec7 operator*(const Rational& s, const RVec7& v) {
    RVec7 r;
    for (int i = 0; i < kNumSupports; ++i) r[i] = s * v[i];
    return r;
}

inline bool is_zero(const RVec7& v) {
    for (int i = 0; i < kNumSupports; ++i)
        if (!v[i].is_zero()) return false;
    return true;
}

// "(1/24, 1/24, ...)" in basis order.
std::string str(const RVec7& v);

// The 49 closed-form products, each a vector of degree-<=3 integer
// polynomials in q. Every entry is divisible by (q-1).
class StructureTable {
public:
    StructureTable();

    const QPoly& entry(int x, int y, int out) const { return e_[x][y][out]; }

    // Adds a constant to one entry; negative-control fixture support only.
    void perturb(int x, int y, int out, int64_t delta);

    bool operator==(const StructureTable& o) const;

private:
    QPoly e_[kNumSupports][kNumSupports][kNumSupports];
};

// Shared immutable instance of the closed-form table.
const StructureTable& structure_table();

IVec7 sc_mul(const StructureTable& t, const IVec7& u, const IVec7& v, int64_t q);
RVec7 sc_mul(const StructureTable& t, const RVec7& u, const RVec7& v, int64_t q);

// Product over Z/r with all inputs and constants reduced mod r.
IVec7 sc_mul_mod(const StructureTable& t, const IVec7& u, const IVec7& v, int64_t q,
                 int64_t r);

// Matrix of left multiplication by the basis element X at a fixed q; column j
// holds the coefficients of X * e_j.
Mat7 left_mult_matrix(const StructureTable& t, SupportClass x, int64_t q);

// Coordinate action of simultaneous matrix transposition and inversion:
// swaps D+ <-> D- and E+ <-> E-, a ring automorphism.
template <typename T>
std::array<T, kNumSupports> sigma_tau(std::array<T, kNumSupports> v) {
    std::swap(v[idx(SupportClass::Dp)], v[idx(SupportClass::Dm)]);
    std::swap(v[idx(SupportClass::Ep)], v[idx(SupportClass::Em)]);
    return v;
}

// Coordinate action of matrix inversion alone: swaps E+ <-> E-, an
// antiautomorphism.
template <typename T>
std::array<T, kNumSupports> inv_star(std::array<T, kNumSupports> v) {
    std::swap(v[idx(SupportClass::Ep)], v[idx(SupportClass::Em)]);
    return v;
}

// (1/(q-1)) A, the two-sided identity.
RVec7 identity_vec(int64_t q);

// Rebuilds the structure constants from brute-force products at the sample
// sizes alone: divide by (q-1), fit the unique quadratic through the first
// three samples, check the remaining samples and integrality, multiply back.
// The result must equal structure_table() or InterpolationMismatch is thrown.
StructureTable interpolate_constants(const std::vector<int64_t>& sample_qs);

// Brute-force class-sum products in a variant group; each constant must be
// the closed form times the variant factor (1/2 for PSL2 at odd q, q-1 for
// GL2, m for the determinant subgroup of order m).
Report scaled_variant_check(int64_t q, GroupKind variant, int64_t det_order = 1);

}  // namespace scring
