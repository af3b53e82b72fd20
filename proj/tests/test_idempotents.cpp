#include "scring/idempotents.hpp"

#include <doctest.h>

#include "scring/errors.hpp"

using namespace scring;

namespace {
constexpr SupportClass A = SupportClass::A;
constexpr SupportClass B = SupportClass::B;
constexpr SupportClass C = SupportClass::C;
constexpr SupportClass Dp = SupportClass::Dp;
}  // namespace

TEST_CASE("central idempotent formulas") {
    RVec7 p1 = pi(1, 3);
    for (int k = 0; k < kNumSupports; ++k) CHECK(p1[k] == Rational(1, 24));
    CHECK(pi(4, 5)[idx(B)] == Rational(0));
    CHECK(pi(4, 5)[idx(A)] == Rational(8, 96));

    for (int64_t q : {3, 4, 9}) {
        RVec7 sum = pi(1, q) + pi(2, q) + pi(3, q) + pi(4, q);
        CHECK(sum == identity_vec(q));
    }

    CHECK_THROWS_AS(pi(0, 3), InvalidSpec);
    CHECK_THROWS_AS(pi(5, 3), InvalidSpec);
    CHECK_THROWS_AS(pi(1, 2), UnsupportedField);
    CHECK_THROWS_AS(matrix_unit(3, 1, 5), InvalidSpec);
    CHECK_THROWS_AS(matrix_unit(1, 0, 5), InvalidSpec);
}

TEST_CASE("matrix units multiply like matrix units") {
    const StructureTable& t = structure_table();
    for (int64_t q : {3, 4, 5, 8}) {
        RVec7 m11 = matrix_unit(1, 1, q);
        RVec7 m12 = matrix_unit(1, 2, q);
        RVec7 m21 = matrix_unit(2, 1, q);
        RVec7 m22 = matrix_unit(2, 2, q);
        CHECK(sc_mul(t, m12, m21, q) == m11);
        CHECK(sc_mul(t, m21, m12, q) == m22);
        CHECK(is_zero(sc_mul(t, m12, m12, q)));
        CHECK(is_zero(sc_mul(t, m11, m22, q)));
        CHECK(m11 + m22 == pi(4, q));
    }
}

TEST_CASE("character values of the rank-one idempotents") {
    const StructureTable& t = structure_table();
    CHECK(character_value(t, pi(2, 5), C, 5) == Rational(8));
    CHECK(character_value(t, pi(3, 7), Dp, 7) == Rational(-6));
    CHECK(character_value(t, pi(1, 4), C, 4) == Rational(18));
    CHECK(character_value(t, pi(1, 5), A, 5) == Rational(4));
    CHECK(character_value(t, pi(4, 5), A, 5) == Rational(4));  // A is central
    CHECK_THROWS_AS(character_value(t, pi(4, 5), C, 5), NotRankOne);
    CHECK_THROWS_AS(character_value(t, matrix_unit(1, 1, 5), Dp, 5), NotRankOne);
    CHECK_THROWS_AS(character_value(t, RVec7{}, C, 5), NotRankOne);
}

TEST_CASE("projector traces") {
    CHECK(projector_trace(4, 7) == Rational(14));
    CHECK(projector_trace(2, 5) == Rational(9));
    for (int64_t q : {3, 5, 8}) {
        CHECK(projector_trace(1, q) == Rational(1));
        CHECK(projector_trace(2, q) == Rational((q + 1) * (q - 2), 2));
        CHECK(projector_trace(3, q) == Rational(q * (q - 1), 2));
        CHECK(projector_trace(4, q) == Rational(2 * q));
        Rational sum;
        for (int i = 1; i <= 4; ++i) sum += projector_trace(i, q);
        CHECK(sum == Rational(q * (q + 1)));
    }
}

TEST_CASE("semisimple structure battery") {
    for (int64_t q : {3, 4, 5, 7, 9}) {
        Report rep = verify_semisimple_structure(structure_table(), q);
        INFO(rep.title);
        for (const auto& c : rep.checks) {
            INFO(c.name, ": ", c.witness);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("a corrupted constant breaks the battery") {
    StructureTable bad = structure_table();
    bad.perturb(idx(C), idx(C), idx(C), 1);
    Report rep = verify_semisimple_structure(bad, 5);
    CHECK(!rep.all_pass());
    CHECK(rep.failures() > 0);
}

TEST_CASE("subalgebra systems reproduce their character tables") {
    for (int64_t q : {3, 5, 7}) {
        for (SubalgebraKind kind :
             {SubalgebraKind::Rank5, SubalgebraKind::Rank4, SubalgebraKind::Rank3}) {
            Report rep = verify_subalgebra_tables(kind, q);
            INFO(rep.title);
            for (const auto& c : rep.checks) {
                INFO(c.name, ": ", c.witness);
                CHECK(c.pass);
            }
        }
    }
}

TEST_CASE("subalgebra spot values") {
    const StructureTable& t = structure_table();
    const int64_t q = 5;
    IdempotentSystem r5 = subalgebra_system(SubalgebraKind::Rank5, q);
    // member order: pi1, pi2, pi3, M11, M22; basis order: A,B,C,D,E
    CHECK(character_value(t, r5.members[4], r5.basis[4], q) == Rational((q - 1) * (q - 3)));
    IdempotentSystem r4 = subalgebra_system(SubalgebraKind::Rank4, q);
    CHECK(character_value(t, r4.members[2], r4.basis[3], q) == Rational(0));
    IdempotentSystem r3 = subalgebra_system(SubalgebraKind::Rank3, q);
    CHECK(r3.unit[idx(A)] == Rational(1, 2 * (q - 1)));
    CHECK(r3.unit[idx(B)] == Rational(1, 2 * (q - 1)));
}

TEST_CASE("fusion constants") {
    for (int64_t q : {3, 4, 5, 7, 9}) {
        Report rep = verify_fusion(q);
        INFO(rep.title);
        for (const auto& c : rep.checks) {
            INFO(c.name, ": ", c.witness);
            CHECK(c.pass);
        }
    }
    FusionTensor f3 = fusion_constants(3);
    CHECK(f3.value[2][2][2] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f3.square[1][1][1] == Rational(0));
    CHECK(f3.square[0][1][1] == Rational(1));
    CHECK(f3.square[0][1][2] == Rational(0));
    FusionTensor f7 = fusion_constants(7);
    CHECK(f7.square[2][2][2] == Rational(3));  // (q-1)/2
    CHECK(f7.square[1][1][2] == Rational(16, 3));  // 2(q-3)^2/(q-1)
}

TEST_CASE("matrix-unit relations survive reduction mod r") {
    Report r35 = embedding_relations_check(3, 5);
    CHECK(r35.checks.size() == 16);
    CHECK(r35.all_pass());
    CHECK(embedding_relations_check(5, 7).all_pass());
    CHECK(embedding_relations_check(4, 7).all_pass());
    CHECK(embedding_relations_check(3, 25).all_pass());
    CHECK(embedding_relations_check(3, 1'000'000'007).all_pass());

    CHECK_THROWS_AS(embedding_relations_check(3, 2), NotCoprime);
    CHECK_THROWS_AS(embedding_relations_check(3, 4), NotCoprime);
    CHECK_THROWS_AS(embedding_relations_check(5, 3), NotCoprime);
    CHECK_THROWS_AS(embedding_relations_check(3, 15), InvalidSpec);
    CHECK_THROWS_AS(embedding_relations_check(3, 1), InvalidSpec);
}
