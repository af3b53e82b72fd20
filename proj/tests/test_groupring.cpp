#include <random>

#include "doctest.h"
#include "scring/groupring.hpp"

using namespace scring;

TEST_CASE("class sums") {
    Field f3(3);
    GroupTable g(f3, GroupKind::SL2);

    GroupVec b = class_sum(g, SupportClass::B);
    CHECK(b.augmentation() == 2);
    CHECK(b[g.index_of(Mat2{0, 1, 2, 0})] == 1);
    CHECK(b[g.index_of(Mat2{0, 2, 1, 0})] == 1);

    GroupVec a = class_sum(g, SupportClass::A);
    CHECK(a.augmentation() == 2);
    CHECK(a[g.index_of(Mat2{1, 0, 0, 1})] == 1);
    CHECK(a[g.index_of(Mat2{2, 0, 0, 2})] == 1);

    GroupTable p(f3, GroupKind::PSL2);
    CHECK(class_sum(p, SupportClass::B).augmentation() == 1);
}

TEST_CASE("convolution against known products") {
    Field f3(3);
    GroupTable g(f3, GroupKind::SL2);
    GroupVec a = class_sum(g, SupportClass::A);
    GroupVec b = class_sum(g, SupportClass::B);
    CHECK(convolve(b, b) == a * 2);

    GroupVec one(g);
    one[g.identity()] = 1;
    GroupVec c = class_sum(g, SupportClass::C);
    CHECK(convolve(c, one) == c);
    CHECK(convolve(one, c) == c);

    Field f4(4);
    GroupTable g4(f4, GroupKind::SL2);
    GroupVec want = (class_sum(g4, SupportClass::C) + class_sum(g4, SupportClass::Em)) * 3;
    CHECK(convolve(class_sum(g4, SupportClass::Dp), class_sum(g4, SupportClass::Dm)) == want);
}

TEST_CASE("support decomposition") {
    Field f5(5);
    GroupTable g(f5, GroupKind::SL2);
    GroupVec c = class_sum(g, SupportClass::C);

    auto d = decompose_support(c);
    REQUIRE(d.ok);
    CHECK(d.coeffs == std::array<int64_t, 7>{0, 0, 1, 0, 0, 0, 0});

    auto cc = decompose_support(convolve(c, c));
    REQUIRE(cc.ok);
    CHECK(cc.coeffs == std::array<int64_t, 7>{48, 48, 8, 24, 24, 24, 24});

    GroupVec single(g);
    single[g.index_of(Mat2{1, 1, 1, 2})] = 1;  // one dense matrix, not the class
    auto bad = decompose_support(single);
    CHECK(!bad.ok);
    CHECK(bad.witness_a >= 0);
    CHECK(bad.witness_b >= 0);
    CHECK(g.support(bad.witness_a) == g.support(bad.witness_b));
    CHECK(single[bad.witness_a] != single[bad.witness_b]);
}

TEST_CASE("augmentation is multiplicative") {
    Field f4(4);
    GroupTable g(f4, GroupKind::SL2);
    GroupVec c = class_sum(g, SupportClass::C);
    CHECK(c.augmentation() == 18);
    CHECK(convolve(c, c).augmentation() == 18 * 18);
}

TEST_CASE("convolution is associative and bilinear on random elements") {
    Field f3(3);
    GroupTable g(f3, GroupKind::SL2);
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int64_t> coeff(-3, 3);
    std::uniform_int_distribution<int64_t> pos(0, g.n() - 1);

    auto rand_vec = [&]() {
        GroupVec v(g);
        for (int t = 0; t < 6; ++t) v[pos(rng)] = coeff(rng);
        return v;
    };

    for (int t = 0; t < 50; ++t) {
        GroupVec x = rand_vec(), y = rand_vec(), z = rand_vec();
        CHECK(convolve(convolve(x, y), z) == convolve(x, convolve(y, z)));
        CHECK(convolve(x + y, z) == convolve(x, z) + convolve(y, z));
        CHECK(convolve(x, y + z) == convolve(x, y) + convolve(x, z));
    }
}

TEST_CASE("sum of all class sums is the full group sum") {
    for (int64_t q : {3, 4}) {
        GroupTable g(Field(q), GroupKind::SL2);
        GroupVec s(g);
        for (int k = 0; k < kNumSupports; ++k)
            s += class_sum(g, static_cast<SupportClass>(k));
        CHECK(s.augmentation() == g.n());
        CHECK(convolve(s, s) == s * g.n());
    }
}

TEST_CASE("diagonal transversal element") {
    Field f3(3);
    GroupTable g(f3, GroupKind::GL2);
    GroupVec fvec = diagonal_f(g);
    CHECK(fvec.augmentation() == 2);

    GroupVec bhat = embedded_class_sum(g, SupportClass::B);
    CHECK(bhat.augmentation() == 2);
    CHECK(convolve(fvec, bhat) == convolve(bhat, fvec));

    Field f4(4);
    GroupTable g4(f4, GroupKind::GL2);
    GroupVec f4vec = diagonal_f(g4);
    CHECK(convolve(f4vec, f4vec) == f4vec * 3);
}

TEST_CASE("brute-force product table at q=3") {
    GroupTable g(Field(3), GroupKind::SL2);
    auto table = support_product_table(g);
    for (int s = 0; s < kNumSupports; ++s)
        for (int t = 0; t < kNumSupports; ++t) CHECK(table[s][t].ok);
    CHECK(table[idx(SupportClass::B)][idx(SupportClass::B)].coeffs ==
          std::array<int64_t, 7>{2, 0, 0, 0, 0, 0, 0});
    CHECK(table[idx(SupportClass::A)][idx(SupportClass::C)].coeffs ==
          std::array<int64_t, 7>{0, 0, 2, 0, 0, 0, 0});
}

TEST_CASE("overflow aborts instead of wrapping") {
    GroupTable g(Field(3), GroupKind::SL2);
    GroupVec x(g);
    x[0] = int64_t{1} << 62;
    CHECK_THROWS_AS(x + x, IntegerOverflow);
    GroupVec y(g);
    y[0] = 2;
    CHECK_THROWS_AS(convolve(x, convolve(y, y)), IntegerOverflow);
}

TEST_CASE("scaled vectors") {
    GroupTable g(Field(3), GroupKind::SL2);
    GroupVec a = class_sum(g, SupportClass::A);
    GroupVec b = class_sum(g, SupportClass::B);

    ScaledVec x{a, Rational(1, 2)};
    ScaledVec y{b, Rational(1, 3)};
    ScaledVec s = add(x, y);
    CHECK(s.coeff(g.identity()) == Rational(1, 2));
    CHECK(s.coeff(g.index_of(Mat2{0, 1, 2, 0})) == Rational(1, 3));

    // (B/2)^2 = (2A)/4 = A/2
    ScaledVec half_b{b, Rational(1, 2)};
    CHECK(equal(convolve(half_b, half_b), ScaledVec{a, Rational(1, 2)}));

    GroupTable g2(Field(3), GroupKind::PSL2);
    ScaledVec z{GroupVec(g2), Rational(1)};
    CHECK_THROWS_AS(add(x, z), GroupMismatch);
}

TEST_CASE("group mismatch detection") {
    GroupTable g1(Field(3), GroupKind::SL2);
    GroupTable g2(Field(3), GroupKind::PSL2);
    GroupVec x(g1), y(g2);
    CHECK_THROWS_AS(x + y, GroupMismatch);
    CHECK_THROWS_AS(convolve(x, y), GroupMismatch);
}
