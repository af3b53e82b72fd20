#include <set>
#include <vector>

#include "doctest.h"
#include "scring/gf.hpp"
#include "scring/rational.hpp"

using namespace scring;

TEST_CASE("field construction and modulus selection") {
    Field f5(5);
    CHECK(f5.p() == 5);
    CHECK(f5.k() == 1);
    CHECK(f5.modulus() == std::vector<int64_t>{0, 1});

    Field f9(9);
    CHECK(f9.p() == 3);
    CHECK(f9.k() == 2);
    CHECK(f9.modulus() == std::vector<int64_t>{1, 0, 1});

    Field f4(4);
    CHECK(f4.modulus() == std::vector<int64_t>{1, 1, 1});

    Field f8(8);
    CHECK(f8.modulus() == std::vector<int64_t>{1, 1, 0, 1});

    CHECK_THROWS_AS(Field(6), NotPrimePower);
    CHECK_THROWS_AS(Field(12), NotPrimePower);
    CHECK_THROWS_AS(Field(1), NotPrimePower);
}

TEST_CASE("prime field arithmetic") {
    Field f5(5);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.mul(2, 3) == 1);
    CHECK(f5.add(4, 3) == 2);
    CHECK(f5.neg(2) == 3);
    CHECK_THROWS_AS(f5.inv(0), ZeroInverse);
    Field f7(7);
    CHECK_THROWS_AS(f7.inv(0), ZeroInverse);
}

TEST_CASE("GF(9) arithmetic with modulus x^2+1") {
    Field f(9);
    // index 3 = x, index 6 = 2x; x * 2x = 2x^2 = -2 = 1
    CHECK(f.mul(3, 6) == 1);
    // x^2 = -1 = 2
    CHECK(f.mul(3, 3) == 2);
    CHECK(f.coeffs(4) == std::vector<int64_t>{1, 1});
}

TEST_CASE("inverses and element count for all in-scope q") {
    for (int64_t q : {2, 3, 4, 5, 7, 8, 9, 25}) {
        Field f(q);
        CHECK(f.q() == q);
        std::set<int64_t> seen;
        for (int64_t x = 0; x < q; ++x) seen.insert(x);
        CHECK(static_cast<int64_t>(seen.size()) == q);
        for (int64_t x = 1; x < q; ++x) {
            CHECK(f.mul(x, f.inv(x)) == 1);
            CHECK(f.add(x, f.neg(x)) == 0);
        }
    }
}

TEST_CASE("units generator is least with exact order q-1") {
    CHECK(Field(2).units_generator() == 1);
    CHECK(Field(5).units_generator() == 2);
    CHECK(Field(7).units_generator() == 3);
    CHECK(Field(9).units_generator() == 4);

    for (int64_t q : {3, 4, 5, 7, 8, 9}) {
        Field f(q);
        const int64_t g = f.units_generator();
        int64_t acc = 1;
        for (int64_t e = 1; e < q - 1; ++e) {
            acc = f.mul(acc, g);
            CHECK(acc != 1);
        }
        CHECK(f.mul(acc, g) == 1);
        for (int64_t x = 1; x < q; ++x) CHECK(f.pow(g, f.dlog(x)) == x);
    }
}

TEST_CASE("legendre symbol") {
    Field f7(7);
    CHECK(f7.legendre(3) == -1);
    CHECK(f7.legendre(1) == 1);
    CHECK(f7.legendre(0) == 0);
    Field f5(5);
    CHECK(f5.legendre(f5.neg(1)) == 1);  // -1 = 4 = 2^2
    CHECK_THROWS_AS(Field(4).legendre(1), EvenCharacteristic);

    for (int64_t q : {3, 5, 7, 9}) {
        Field f(q);
        int squares = 0;
        for (int64_t x = 1; x < q; ++x) {
            if (f.legendre(x) == 1) ++squares;
            for (int64_t y = 1; y < q; ++y)
                CHECK(f.legendre(f.mul(x, y)) == f.legendre(x) * f.legendre(y));
        }
        CHECK(squares == (q - 1) / 2);
    }
}

TEST_CASE("quadratic extension") {
    Field f5(5);
    ExtField e(f5);
    CHECK(e.size() == 25);
    CHECK(e.m0() == 2);  // t^2 + 2 is the least irreducible quadratic over GF(5)
    CHECK(e.m1() == 0);

    // Frobenius is an involution fixing exactly the base field.
    int fixed = 0;
    for (int64_t x = 0; x < e.size(); ++x) {
        CHECK(e.frobenius(e.frobenius(x)) == x);
        if (e.frobenius(x) == x) ++fixed;
    }
    CHECK(fixed == 5);

    for (int64_t x = 0; x < 5; ++x) {
        CHECK(e.trace(e.embed(x)) == f5.add(x, x));
        CHECK(e.norm(e.embed(x)) == f5.mul(x, x));
    }

    // norm(g) generates GF(5)^*: g^6 has order 4.
    const int64_t g = e.generator();
    const int64_t n = e.norm(g);
    CHECK(f5.mul(n, n) != 1);
    CHECK(n != 1);

    for (int64_t x = 1; x < e.size(); ++x) {
        CHECK(e.mul(x, e.inv(x)) == 1);
        for (int64_t y = 1; y < e.size(); ++y)
            CHECK(f5.mul(e.norm(x), e.norm(y)) == e.norm(e.mul(x, y)));
    }

    for (int64_t q : {3, 4, 7, 8, 9}) {
        Field f(q);
        ExtField ext(f);
        const int64_t gen = ext.generator();
        int64_t acc = 1;
        for (int64_t k = 1; k < q * q - 1; ++k) {
            acc = ext.mul(acc, gen);
            CHECK(acc != 1);
        }
        CHECK(ext.mul(acc, gen) == 1);
    }
}

TEST_CASE("descriptor safety wrapper") {
    Field a(5), b(7), a2(5);
    Fq x(a, 2), y(b, 3), z(a2, 4);
    CHECK_THROWS_AS(x + y, DescriptorMismatch);
    CHECK((x * z).idx() == 3);  // same descriptor by value
    CHECK((x + x).idx() == 4);
}

TEST_CASE("rationals") {
    Rational r(6, -8);
    CHECK(r.num() == -3);
    CHECK(r.den() == 4);
    CHECK(r.str() == "-3/4");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
    CHECK((Rational(1, 2) / Rational(1, 4)).as_integer() == 2);
    CHECK_THROWS_AS(Rational(1, 0), ZeroInverse);
    CHECK_THROWS_AS(Rational(1, 2).as_integer(), NotNearInteger);
    CHECK(Rational(7).str() == "7");
    CHECK((-Rational(1, 2)).str() == "-1/2");
    CHECK((3 * Rational(1, 6)) == Rational(1, 2));
}
