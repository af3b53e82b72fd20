#include "scring/groupring.hpp"

#include <numeric>

#include "scring/checked.hpp"

namespace scring {

void GroupVec::check_same(const GroupVec& o) const {
    if (g_ != o.g_) throw GroupMismatch("group vectors over different tables");
}

GroupVec& GroupVec::operator+=(const GroupVec& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = ck_add(c_[i], o.c_[i]);
    return *this;
}

GroupVec& GroupVec::operator-=(const GroupVec& o) {
    check_same(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = ck_sub(c_[i], o.c_[i]);
    return *this;
}

GroupVec& GroupVec::operator*=(int64_t s) {
    for (auto& v : c_) v = ck_mul(v, s);
    return *this;
}

bool GroupVec::operator==(const GroupVec& o) const {
    check_same(o);
    return c_ == o.c_;
}

bool GroupVec::is_zero() const {
    for (int64_t v : c_)
        if (v != 0) return false;
    return true;
}

int64_t GroupVec::augmentation() const {
    int64_t s = 0;
    for (int64_t v : c_) s = ck_add(s, v);
    return s;
}

GroupVec convolve(const GroupVec& x, const GroupVec& y) {
    if (&x.group() != &y.group())
        throw GroupMismatch("convolution of vectors over different tables");
    const GroupTable& g = x.group();
    const int64_t n = g.n();

    std::vector<int64_t> xs, ys;
    for (int64_t i = 0; i < n; ++i)
        if (x[i] != 0) xs.push_back(i);
    for (int64_t j = 0; j < n; ++j)
        if (y[j] != 0) ys.push_back(j);

    GroupVec r(g);
    for (int64_t i : xs) {
        const int64_t xi = x[i];
        for (int64_t j : ys) {
            const int64_t k = g.mul(i, j);
            r[k] = ck_add(r[k], ck_mul(xi, y[j]));
        }
    }
    return r;
}

GroupVec class_sum(const GroupTable& g, SupportClass s) {
    GroupVec r(g);
    for (int64_t i = 0; i < g.n(); ++i)
        if (g.support(i) == s) r[i] = 1;
    return r;
}

GroupVec embedded_class_sum(const GroupTable& g, SupportClass s) {
    GroupVec r(g);
    for (int64_t i = 0; i < g.n(); ++i)
        if (g.det(i) == 1 && g.support(i) == s) r[i] = 1;
    return r;
}

GroupVec diagonal_f(const GroupTable& g) {
    const Field& f = g.field();
    GroupVec r(g);
    for (int64_t t = 1; t < f.q(); ++t)
        r[g.index_of(Mat2{1, 0, 0, static_cast<int32_t>(t)})] = 1;
    return r;
}

SupportDecomposition decompose_support(const GroupVec& v) {
    const GroupTable& g = v.group();
    SupportDecomposition d;
    std::array<int64_t, kNumSupports> first;
    first.fill(-1);
    for (int64_t i = 0; i < g.n(); ++i) {
        const int s = idx(g.support(i));
        if (first[s] < 0) {
            first[s] = i;
            d.coeffs[s] = v[i];
        } else if (v[i] != d.coeffs[s]) {
            d.ok = false;
            d.witness_a = first[s];
            d.witness_b = i;
            return d;
        }
    }
    d.ok = true;
    return d;
}

SupportProducts support_product_table(const GroupTable& g) {
    std::array<GroupVec, kNumSupports> sums{
        class_sum(g, SupportClass::A),  class_sum(g, SupportClass::B),
        class_sum(g, SupportClass::C),  class_sum(g, SupportClass::Dp),
        class_sum(g, SupportClass::Dm), class_sum(g, SupportClass::Ep),
        class_sum(g, SupportClass::Em)};
    SupportProducts table;
    for (int s = 0; s < kNumSupports; ++s)
        for (int t = 0; t < kNumSupports; ++t)
            table[s][t] = decompose_support(convolve(sums[s], sums[t]));
    return table;
}

ScaledVec convolve(const ScaledVec& x, const ScaledVec& y) {
    return ScaledVec{convolve(x.vec, y.vec), x.scale * y.scale};
}

ScaledVec add(const ScaledVec& x, const ScaledVec& y) {
    if (&x.vec.group() != &y.vec.group())
        throw GroupMismatch("sum of scaled vectors over different tables");
    const int64_t d1 = x.scale.den(), d2 = y.scale.den();
    const int64_t l = ck_mul(d1 / std::gcd(d1, d2), d2);
    const int64_t m1 = ck_mul(x.scale.num(), l / d1);
    const int64_t m2 = ck_mul(y.scale.num(), l / d2);
    return ScaledVec{x.vec * m1 + y.vec * m2, Rational(1, l)};
}

bool equal(const ScaledVec& x, const ScaledVec& y) {
    if (&x.vec.group() != &y.vec.group())
        throw GroupMismatch("comparison of scaled vectors over different tables");
    for (int64_t i = 0; i < x.vec.size(); ++i)
        if (x.coeff(i) != y.coeff(i)) return false;
    return true;
}

}  // namespace scring
