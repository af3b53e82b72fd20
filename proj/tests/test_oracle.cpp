#include <string>

#include "doctest.h"
#include "scring/errors.hpp"
#include "scring/oracle.hpp"

using namespace scring;

namespace {

void report_failures(const Report& r) {
    for (const auto& c : r.checks) {
        INFO(r.title, ": ", c.name, " -- ", c.witness);
        CHECK(c.pass);
    }
}

const Check* find_failing(const Report& r) {
    for (const auto& c : r.checks)
        if (!c.pass) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("brute-force products match the closed forms") {
    for (int64_t q : {int64_t{3}, int64_t{4}, int64_t{5}, int64_t{8}, int64_t{9}}) {
        INFO("q=", q);
        Report r = verify_product_table(q);
        CHECK(r.checks.size() == 50);
        report_failures(r);
    }
}

TEST_CASE("a corrupted structure constant is detected with a witness") {
    StructureTable t = structure_table();
    t.perturb(idx(SupportClass::C), idx(SupportClass::C), idx(SupportClass::A), 1);
    Report r = verify_product_table(5, t);
    CHECK_FALSE(r.all_pass());
    const Check* bad = find_failing(r);
    REQUIRE(bad != nullptr);
    CHECK(bad->name == "C*C");
    CHECK(bad->witness.find("closed form gives") != std::string::npos);
}

TEST_CASE("rank-1 support classes form a ring at desk scale") {
    {
        Report r = rank1_support_ring_check(2, 2);
        // 1 population check + 9 product families
        CHECK(r.checks.size() == 10);
        report_failures(r);
    }
    report_failures(rank1_support_ring_check(2, 3));
    {
        Report r = rank1_support_ring_check(3, 2);
        CHECK(r.checks.size() == 50);
        report_failures(r);
    }
    CHECK_THROWS_AS(rank1_support_ring_check(4, 2), InvalidSpec);
    CHECK_THROWS_AS(rank1_support_ring_check(1, 2), InvalidSpec);
    CHECK_THROWS_AS(rank1_support_ring_check(2, 5), InvalidSpec);
}

TEST_CASE("the matrix-algebra product escapes the invertible supports") {
    for (int64_t q : {int64_t{3}, int64_t{4}, int64_t{5}}) {
        INFO("q=", q);
        report_failures(gl2_rank1_counterexample(q));
    }
    CHECK_THROWS_AS(gl2_rank1_counterexample(2), InvalidSpec);
    CHECK_THROWS_AS(gl2_rank1_counterexample(7), InvalidSpec);
}

TEST_CASE("aggregated suite over a small configuration") {
    OracleConfig cfg;
    cfg.qs = {3, 4};
    Report r = run_full_suite(cfg);
    CHECK(r.seed == 12345);
    report_failures(r);
    REQUIRE(!r.checks.empty());
    CHECK(r.checks.back().name.find("wall time") != std::string::npos);
}

TEST_CASE("suite configuration errors") {
    OracleConfig cfg;
    cfg.qs = {};
    CHECK_THROWS_AS(run_full_suite(cfg), ConfigError);
    cfg.qs = {2};
    CHECK_THROWS_AS(run_full_suite(cfg), ConfigError);
    cfg.qs = {3, 6};
    CHECK_THROWS_AS(run_full_suite(cfg), ConfigError);
}

TEST_CASE("negative controls fail loudly inside the suite") {
    {
        OracleConfig cfg;
        cfg.qs = {3};
        cfg.corrupt_structure = true;
        Report r = run_full_suite(cfg);
        CHECK_FALSE(r.all_pass());
        const Check* bad = find_failing(r);
        REQUIRE(bad != nullptr);
        CHECK(bad->name.find("C*C") != std::string::npos);
        CHECK(bad->witness.find("closed form gives") != std::string::npos);
    }
    {
        OracleConfig cfg;
        cfg.qs = {4};
        cfg.corrupt_scheme = true;
        Report r = run_full_suite(cfg);
        CHECK_FALSE(r.all_pass());
        const Check* bad = find_failing(r);
        REQUIRE(bad != nullptr);
        CHECK(bad->name.find("corrupted scheme") != std::string::npos);
    }
}
