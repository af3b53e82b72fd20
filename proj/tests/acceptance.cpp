// End-to-end acceptance gate. Each numbered criterion prints exactly one
// [PASS]/[FAIL] line; the process exits nonzero if any criterion fails.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "scring/chars.hpp"
#include "scring/cli.hpp"
#include "scring/idempotents.hpp"
#include "scring/oracle.hpp"
#include "scring/schemes.hpp"
#include "scring/scring.hpp"

using namespace scring;

namespace {

int g_failures = 0;

int64_t elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// Folds a report into a criterion: on the first failure, captures the check
// name and witness as the criterion's detail string.
bool absorb(const Report& r, std::string& detail) {
    if (r.all_pass()) return true;
    for (const auto& c : r.checks) {
        if (!c.pass) {
            detail = r.title + ": " + c.name + (c.witness.empty() ? "" : " [" + c.witness + "]");
            return false;
        }
    }
    return false;
}

void criterion(int n, const std::string& label,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("unexpected exception: ") + e.what();
    }
    if (!ok) ++g_failures;
    std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", n, label.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

}  // namespace

int main() {
    criterion(1,
              "all 49 class-sum products match the closed-form table exactly for "
              "q in {3,4,5,7,8,9} (294 identities, under 60s)",
              [](std::string& d) {
                  const auto t0 = std::chrono::steady_clock::now();
                  bool ok = true;
                  int identities = 0;
                  for (int64_t q : std::vector<int64_t>{3, 4, 5, 7, 8, 9}) {
                      Report r = verify_product_table(q);
                      identities += 49;
                      if (!absorb(r, d)) ok = false;
                  }
                  const int64_t ms = elapsed_ms(t0);
                  if (ms >= 60000) {
                      d = "runtime " + std::to_string(ms) + "ms exceeds the 60s budget";
                      ok = false;
                  }
                  if (ok)
                      d = std::to_string(identities) + " identities exact in " +
                          std::to_string(ms) + "ms";
                  return ok;
              });

    criterion(2,
              "structure constants refit by interpolation from brute-force samples "
              "at q in {3,4,5} reproduce the coded table exactly",
              [](std::string& d) {
                  StructureTable rebuilt = interpolate_constants({3, 4, 5});
                  if (rebuilt == structure_table()) return true;
                  d = "rebuilt table differs from the coded table";
                  return false;
              });

    criterion(3,
              "central idempotents, matrix units, and the Q+Q+Q+M2(Q) dimension "
              "count verify for q in {3,4,5,7,9}",
              [](std::string& d) {
                  bool ok = true;
                  for (int64_t q : std::vector<int64_t>{3, 4, 5, 7, 9})
                      if (!absorb(verify_semisimple_structure(structure_table(), q), d))
                          ok = false;
                  return ok;
              });

    criterion(4,
              "projector traces equal (1, (q+1)(q-2)/2, q(q-1)/2, 2q) and sum to "
              "q(q+1) exactly for q in {3,5,7,8}",
              [](std::string& d) {
                  bool ok = true;
                  for (int64_t q : std::vector<int64_t>{3, 5, 7, 8}) {
                      const Rational expect[4] = {Rational(1), Rational((q + 1) * (q - 2), 2),
                                                  Rational(q * (q - 1), 2), Rational(2 * q)};
                      Rational sum(0);
                      for (int i = 1; i <= 4; ++i) {
                          const Rational tr = projector_trace(i, q);
                          sum = sum + tr;
                          if (!(tr == expect[i - 1])) {
                              d = "trace of projector " + std::to_string(i) + " at q=" +
                                  std::to_string(q) + " is " + tr.str() + ", expected " +
                                  expect[i - 1].str();
                              ok = false;
                          }
                      }
                      if (!(sum == Rational(q * (q + 1)))) {
                          d = "trace sum at q=" + std::to_string(q) + " is " + sum.str();
                          ok = false;
                      }
                  }
                  return ok;
              });

    criterion(5,
              "rank-5/4/3 subalgebra character tables match entry for entry at "
              "q in {3,5,7}; fusion tensor symmetric, q=3 squares in {0,1}",
              [](std::string& d) {
                  bool ok = true;
                  for (int64_t q : std::vector<int64_t>{3, 5, 7}) {
                      for (SubalgebraKind k : {SubalgebraKind::Rank5, SubalgebraKind::Rank4,
                                               SubalgebraKind::Rank3})
                          if (!absorb(verify_subalgebra_tables(k, q), d)) ok = false;
                      if (!absorb(verify_fusion(q), d)) ok = false;
                      const FusionTensor f = fusion_constants(q);
                      for (int i = 0; i < 3; ++i)
                          for (int j = 0; j < 3; ++j)
                              for (int k = 0; k < 3; ++k) {
                                  const Rational& s = f.square[i][j][k];
                                  const bool sym = s == f.square[i][k][j] &&
                                                   s == f.square[j][i][k] &&
                                                   s == f.square[j][k][i] &&
                                                   s == f.square[k][i][j] &&
                                                   s == f.square[k][j][i];
                                  if (!sym) {
                                      d = "fusion tensor not symmetric at q=" + std::to_string(q);
                                      ok = false;
                                  }
                                  if (q == 3 && !(s == Rational(0) || s == Rational(1))) {
                                      d = "q=3 squared constant " + s.str() + " not in {0,1}";
                                      ok = false;
                                  }
                              }
                  }
                  return ok;
              });

    criterion(6,
              "all four association-scheme variants pass the axioms with the "
              "displayed constants and eigenvalue table at q in {4,5} (under 2min)",
              [](std::string& d) {
                  const auto t0 = std::chrono::steady_clock::now();
                  bool ok = true;
                  for (int64_t q : std::vector<int64_t>{4, 5}) {
                      for (SchemeVariant v : {SchemeVariant::D5, SchemeVariant::Merged45,
                                              SchemeVariant::Merged12_45, SchemeVariant::Tilde})
                          if (!absorb(verify_scheme(q, v), d)) ok = false;
                      if (!absorb(verify_beta(q), d)) ok = false;
                      const BetaSystem b = beta_system(q);
                      const int64_t dimsum = b.dims[0] + b.dims[1] + b.dims[2] + b.dims[3];
                      if (dimsum != q * q * q - q) {
                          d = "eigenspace dimensions at q=" + std::to_string(q) + " sum to " +
                              std::to_string(dimsum);
                          ok = false;
                      }
                  }
                  const BetaSystem b5 = beta_system(5);
                  const std::array<int64_t, 4> want{1, 9, 105, 5};
                  if (b5.dims != want) {
                      d = "q=5 eigenspace dimensions are not (1,9,105,5)";
                      ok = false;
                  }
                  const int64_t ms = elapsed_ms(t0);
                  if (ms >= 120000) {
                      d = "runtime " + std::to_string(ms) + "ms exceeds the 2min budget";
                      ok = false;
                  }
                  if (ok) d = "1+9+105+5=120 at q=5; done in " + std::to_string(ms) + "ms";
                  return ok;
              });

    criterion(7,
              "character suite at q in {3,4,5,7}: orthogonality to 1e-9, exact "
              "class profiles, exact transported projectors, family totals "
              "q(q+1), multiplicity ranks snapped at 1e-6",
              [](std::string& d) {
                  bool ok = true;
                  for (int64_t q : std::vector<int64_t>{3, 4, 5, 7}) {
                      if (!absorb(character_orthogonality(q), d)) ok = false;
                      if (!absorb(fx_profile_check(q), d)) ok = false;
                      if (!absorb(pi_tilde_profile_check(q), d)) ok = false;
                      if (!absorb(decomposition_report(q), d)) ok = false;
                      if (q % 2 == 1 && q >= 5)
                          if (!absorb(mean_values_check(q), d)) ok = false;
                  }
                  return ok;
              });

    criterion(8,
              "variant scalings: PSL2 halves the constants at q in {3,5}, GL2 "
              "multiplies by q-1 at q in {3,4}, determinant subgroup of order 2 "
              "doubles them at q=5",
              [](std::string& d) {
                  bool ok = true;
                  if (!absorb(scaled_variant_check(3, GroupKind::PSL2), d)) ok = false;
                  if (!absorb(scaled_variant_check(5, GroupKind::PSL2), d)) ok = false;
                  if (!absorb(scaled_variant_check(3, GroupKind::GL2), d)) ok = false;
                  if (!absorb(scaled_variant_check(4, GroupKind::GL2), d)) ok = false;
                  if (!absorb(scaled_variant_check(5, GroupKind::DetSubgroup, 2), d)) ok = false;
                  return ok;
              });

    criterion(9,
              "rank-1 support classes close under products for (n,q) in "
              "{(2,2),(2,3),(3,2)}; the GL2 product escaping the invertible span "
              "matches (q-1) x sum of (q-1)^3 rank-1 matrices at q in {3,4}",
              [](std::string& d) {
                  bool ok = true;
                  if (!absorb(rank1_support_ring_check(2, 2), d)) ok = false;
                  if (!absorb(rank1_support_ring_check(2, 3), d)) ok = false;
                  if (!absorb(rank1_support_ring_check(3, 2), d)) ok = false;
                  if (!absorb(gl2_rank1_counterexample(3), d)) ok = false;
                  if (!absorb(gl2_rank1_counterexample(4), d)) ok = false;
                  return ok;
              });

    criterion(10,
              "negative controls: a wrong structure constant and a dropped "
              "adjacency pair are both detected with witnesses and exit code 1",
              [](std::string& d) {
                  bool ok = true;
                  std::ostringstream out1, err1;
                  const int c1 = run_cli({"verify", "--q", "3", "--inject-fault",
                                          "structure-table", "--format", "json"},
                                         out1, err1);
                  if (c1 != 1) {
                      d = "structure-table fault exited with " + std::to_string(c1);
                      ok = false;
                  }
                  if (out1.str().find("\"status\": \"fail\"") == std::string::npos ||
                      out1.str().find("closed form gives") == std::string::npos) {
                      d = "structure-table fault did not report a witness";
                      ok = false;
                  }
                  std::ostringstream out2, err2;
                  const int c2 = run_cli({"verify", "--q", "4", "--inject-fault",
                                          "scheme-adjacency", "--format", "json"},
                                         out2, err2);
                  if (c2 != 1) {
                      d = "scheme-adjacency fault exited with " + std::to_string(c2);
                      ok = false;
                  }
                  if (out2.str().find("\"status\": \"fail\"") == std::string::npos) {
                      d = "scheme-adjacency fault did not report a failing check";
                      ok = false;
                  }
                  return ok;
              });

    std::printf("acceptance: %d of 10 criteria passed\n", 10 - g_failures);
    return g_failures == 0 ? 0 : 1;
}
