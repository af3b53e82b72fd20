#include "scring/qpoly.hpp"

#include <doctest.h>

#include "scring/errors.hpp"

using scring::IntegerOverflow;
using scring::NonIntegerFit;
using scring::QPoly;

TEST_CASE("construction trims trailing zeros") {
    CHECK(QPoly{0, 0, 0}.is_zero());
    CHECK(QPoly{0, 0, 0}.degree() == -1);
    CHECK(QPoly{5}.degree() == 0);
    CHECK(QPoly{-2, 5, -4, 1}.degree() == 3);
    CHECK(QPoly{1, 2, 0, 0}.degree() == 1);
    CHECK(QPoly::constant(7).coeff(0) == 7);
    CHECK(QPoly::variable().coeff(1) == 1);
}

TEST_CASE("evaluation") {
    QPoly p = QPoly{-1, 1} * QPoly{-2, 1} * QPoly{-3, 1};  // (q-1)(q-2)(q-3)
    CHECK(p.eval(5) == 24);
    CHECK(p.eval(3) == 0);
    CHECK(p.eval(1) == 0);
    CHECK(p.eval(0) == -6);
    CHECK(QPoly{}.eval(100) == 0);
}

TEST_CASE("ring operations") {
    QPoly q1{-1, 1};
    QPoly sq = q1 * q1;
    CHECK(sq == QPoly{1, -2, 1});
    CHECK((q1 + (-q1)).is_zero());
    CHECK((sq - q1) == QPoly{2, -3, 1});
    CHECK((q1 * 3) == QPoly{-3, 3});
    CHECK((QPoly{} * q1).is_zero());
    CHECK(q1 != sq);
}

TEST_CASE("exact division by a linear root") {
    QPoly p = QPoly{-1, 1} * QPoly{-2, 1};  // q^2 - 3q + 2
    CHECK(p.div_exact_root(1) == QPoly{-2, 1});
    CHECK(p.div_exact_root(2) == QPoly{-1, 1});
    CHECK(QPoly{}.div_exact_root(1).is_zero());
    CHECK_THROWS_AS(p.div_exact_root(3), NonIntegerFit);
    CHECK_THROWS_AS((QPoly{-1, 1}.div_exact_root(2)), NonIntegerFit);
}

TEST_CASE("printing") {
    CHECK(QPoly{}.str() == "0");
    CHECK(QPoly{-1, 1}.str() == "q - 1");
    CHECK(QPoly{3, -1}.str() == "-q + 3");
    CHECK(QPoly{-2, 5, -4, 1}.str() == "q^3 - 4*q^2 + 5*q - 2");
    CHECK(QPoly{0, 0, 2}.str() == "2*q^2");
    CHECK(QPoly{7}.str() == "7");
    CHECK(QPoly{0, 1}.str() == "q");
    CHECK(QPoly{0, -1}.str() == "-q");
}

TEST_CASE("overflow is detected") {
    const int64_t big = int64_t{1} << 62;
    QPoly huge{big};
    CHECK_THROWS_AS(huge * 4, IntegerOverflow);
    CHECK_THROWS_AS((QPoly{0, 0, 0, 1}.eval(3'000'000)), IntegerOverflow);
    CHECK_THROWS_AS(huge + huge, IntegerOverflow);
}
