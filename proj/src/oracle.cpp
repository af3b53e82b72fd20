#include "scring/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "scring/chars.hpp"
#include "scring/errors.hpp"
#include "scring/gf.hpp"
#include "scring/groupring.hpp"
#include "scring/idempotents.hpp"
#include "scring/schemes.hpp"
#include "scring/sl2.hpp"

namespace scring {

namespace {

// Square matrix over a small field, entries as element indices, row-major.
struct SmallMat {
    int n = 0;
    std::vector<int64_t> e;

    int64_t code(int64_t q) const {
        int64_t c = 0;
        for (int64_t x : e) c = c * q + x;
        return c;
    }
};

SmallMat small_mul(const Field& f, const SmallMat& a, const SmallMat& b) {
    const int n = a.n;
    SmallMat r{n, std::vector<int64_t>(static_cast<size_t>(n) * n, 0)};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int64_t acc = 0;
            for (int k = 0; k < n; ++k)
                acc = f.add(acc, f.mul(a.e[i * n + k], b.e[k * n + j]));
            r.e[i * n + j] = acc;
        }
    return r;
}

int small_rank(const Field& f, SmallMat m) {
    const int n = m.n;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int pivot = -1;
        for (int row = rank; row < n; ++row)
            if (m.e[row * n + col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(m.e[rank * n + j], m.e[pivot * n + j]);
        const int64_t inv = f.inv(m.e[rank * n + col]);
        for (int row = rank + 1; row < n; ++row) {
            const int64_t factor = f.mul(m.e[row * n + col], inv);
            if (factor == 0) continue;
            for (int j = 0; j < n; ++j)
                m.e[row * n + j] =
                    f.sub(m.e[row * n + j], f.mul(factor, m.e[rank * n + j]));
        }
        ++rank;
    }
    return rank;
}

std::string mask_str(int mask, int n) {
    std::string s;
    for (int i = 0; i < n; ++i) s += (mask >> i) & 1 ? '1' : '0';
    return s;
}

std::string mat_str(const SmallMat& m) {
    std::string s = "[";
    for (int i = 0; i < m.n; ++i) {
        if (i) s += "; ";
        for (int j = 0; j < m.n; ++j) {
            if (j) s += " ";
            s += std::to_string(m.e[i * m.n + j]);
        }
    }
    return s + "]";
}

}  // namespace

Report verify_product_table(int64_t q, const StructureTable& table) {
    Report r;
    r.title = "brute-force products q=" + std::to_string(q);
    Field f(q);
    GroupTable g(f, GroupKind::SL2);
    SupportProducts brute = support_product_table(g);
    bool all_ok = true;
    for (int x = 0; x < kNumSupports; ++x)
        for (int y = 0; y < kNumSupports; ++y) {
            const SupportDecomposition& d = brute[x][y];
            const std::string nm =
                std::string(kSupportNames[x]) + "*" + kSupportNames[y];
            if (!d.ok) {
                all_ok = false;
                r.add(nm, false,
                      "product is not support-constant, elements " +
                          std::to_string(d.witness_a) + " and " +
                          std::to_string(d.witness_b) + " disagree");
                continue;
            }
            bool same = true;
            std::string w;
            for (int out = 0; out < kNumSupports; ++out) {
                const int64_t want = table.entry(x, y, out).eval(q);
                if (d.coeffs[out] != want) {
                    same = false;
                    w = std::string("coefficient of ") + kSupportNames[out] + " is " +
                        std::to_string(d.coeffs[out]) + ", closed form gives " +
                        std::to_string(want);
                    break;
                }
            }
            all_ok = all_ok && same;
            r.add(nm, same, w);
        }
    r.add("all 49 products closed over the seven classes", all_ok, "");
    return r;
}

Report rank1_support_ring_check(int n, int64_t q) {
    if (n < 2 || n > 3 || q < 2 || q > 3)
        throw InvalidSpec("rank-1 support check is desk scale: n in {2,3}, q in {2,3}");
    Report r;
    r.title = "rank-1 support ring n=" + std::to_string(n) + " q=" + std::to_string(q);
    Field f(q);
    const int nn = n * n;
    int64_t total = 1;
    for (int i = 0; i < nn; ++i) total *= q;

    // Classify every rank-1 matrix by (row pattern, column pattern).
    const int patterns = (1 << n) - 1;
    const int nclasses = patterns * patterns;
    auto class_index = [&](int rmask, int cmask) {
        return (rmask - 1) * patterns + (cmask - 1);
    };
    std::vector<std::vector<SmallMat>> members(nclasses);
    std::vector<int> class_of_code(total, -1);
    for (int64_t code = 0; code < total; ++code) {
        SmallMat m{n, std::vector<int64_t>(nn)};
        int64_t c = code;
        for (int i = nn - 1; i >= 0; --i) {
            m.e[i] = c % q;
            c /= q;
        }
        if (small_rank(f, m) != 1) continue;
        int rmask = 0, cmask = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (m.e[i * n + j] != 0) {
                    rmask |= 1 << i;
                    cmask |= 1 << j;
                }
        const int cls = class_index(rmask, cmask);
        class_of_code[code] = cls;
        members[cls].push_back(std::move(m));
    }

    bool populated = true;
    for (int c = 0; c < nclasses; ++c) populated = populated && !members[c].empty();
    r.add("all " + std::to_string(nclasses) + " support patterns occur", populated, "");

    for (int rm = 1; rm <= patterns && populated; ++rm)
        for (int cm = 1; cm <= patterns; ++cm) {
            const int c1 = class_index(rm, cm);
            bool ok = true;
            std::string w;
            for (int c2 = 0; c2 < nclasses && ok; ++c2) {
                std::vector<int64_t> count(total, 0);
                for (const SmallMat& a : members[c1])
                    for (const SmallMat& b : members[c2]) {
                        SmallMat p = small_mul(f, a, b);
                        count[p.code(q)] += 1;  // code 0 is the zero matrix
                    }
                // Constant on every class, including members the product missed.
                for (int c3 = 0; c3 < nclasses && ok; ++c3) {
                    const int64_t coeff = count[members[c3][0].code(q)];
                    for (const SmallMat& m : members[c3])
                        if (count[m.code(q)] != coeff) {
                            ok = false;
                            w = "against class " + std::to_string(c2) + ": " + mat_str(m) +
                                " has coefficient " + std::to_string(count[m.code(q)]) +
                                ", class starts at " + std::to_string(coeff);
                            break;
                        }
                    for (const SmallMat& m : members[c3]) count[m.code(q)] = 0;
                }
                // Anything left over is not rank 1 (and not zero): a real leak.
                for (int64_t code = 1; code < total && ok; ++code)
                    if (count[code] != 0 && class_of_code[code] < 0) {
                        ok = false;
                        w = "product against class " + std::to_string(c2) +
                            " leaves the rank-1 span at code " + std::to_string(code);
                    }
            }
            r.add("products from R" + mask_str(rm, n) + "/C" + mask_str(cm, n) +
                      " decompose with constant coefficients",
                  ok, w);
        }
    return r;
}

Report gl2_rank1_counterexample(int64_t q) {
    if (q < 3 || q > 5) throw InvalidSpec("counterexample is pinned to q in {3,4,5}");
    Report r;
    r.title = "matrix-algebra counterexample q=" + std::to_string(q);
    Field f(q);

    // Left factor: a,c nonzero, b=d=0. Right factor: a,b nonzero, c=d=0.
    std::vector<SmallMat> left, right;
    for (int64_t x = 1; x < q; ++x)
        for (int64_t y = 1; y < q; ++y) {
            left.push_back({2, {x, 0, y, 0}});
            right.push_back({2, {x, y, 0, 0}});
        }

    std::map<int64_t, int64_t> count;
    bool all_rank1_dense = true;
    std::string w;
    for (const SmallMat& a : left)
        for (const SmallMat& b : right) {
            SmallMat p = small_mul(f, a, b);
            bool dense = true;
            for (int64_t x : p.e) dense = dense && x != 0;
            if (!dense || small_rank(f, p) != 1) {
                all_rank1_dense = false;
                w = mat_str(a) + " * " + mat_str(b) + " = " + mat_str(p);
            }
            count[p.code(q)] += 1;
        }
    r.add("every product is rank 1 with four nonzero entries", all_rank1_dense, w);

    const int64_t q1 = q - 1;
    const int64_t distinct = static_cast<int64_t>(count.size());
    r.add("the products cover (q-1)^3 distinct matrices", distinct == q1 * q1 * q1,
          std::to_string(distinct) + " vs " + std::to_string(q1 * q1 * q1));
    bool uniform = true;
    for (const auto& [code, c] : count)
        if (c != q1) {
            uniform = false;
            w = "code " + std::to_string(code) + " has coefficient " + std::to_string(c);
            break;
        }
    r.add("every matrix appears with coefficient q-1", uniform, w);
    int64_t total_terms = 0;
    for (const auto& [code, c] : count) {
        (void)code;
        total_terms += c;
    }
    r.add("augmentations agree: (q-1)^2 (q-1)^2 products, (q-1) on each of (q-1)^3 matrices",
          total_terms == static_cast<int64_t>(left.size() * right.size()) &&
              total_terms == q1 * distinct,
          std::to_string(total_terms) + " terms");

    // All the products are singular, so no integer combination of support
    // classes of invertible matrices can express the left-hand side.
    bool all_singular = true;
    for (const auto& [code, c] : count) {
        (void)c;
        SmallMat m{2, {0, 0, 0, 0}};
        int64_t x = code;
        for (int i = 3; i >= 0; --i) {
            m.e[i] = x % q;
            x /= q;
        }
        if (small_rank(f, m) == 2) all_singular = false;
    }
    r.add("no product is invertible, so the product escapes the invertible-support span",
          all_singular, "");
    return r;
}

namespace {

int64_t validated_q(int64_t q) {
    if (q <= 2)
        throw ConfigError("q > 2 is required for the support-class ring, got q=" +
                          std::to_string(q));
    try {
        Field probe(q);
    } catch (const NotPrimePower&) {
        throw ConfigError("q=" + std::to_string(q) + " is not a prime power");
    }
    return q;
}

// Conjugation by a seeded random monomial element must permute the class
// sums as predicted: a diagonal element fixes all seven, an antidiagonal one
// swaps D+ with D- and E+ with E- (the transpose-inverse automorphism).
Report conjugation_spot_check(int64_t q, std::mt19937_64& rng) {
    Report r;
    r.title = "conjugation spot-check q=" + std::to_string(q);
    Field f(q);
    GroupTable g(f, GroupKind::SL2);

    std::vector<int64_t> monomial;
    for (int64_t i = 0; i < g.n(); ++i) {
        const SupportClass s = g.support(i);
        if (s == SupportClass::A || s == SupportClass::B) monomial.push_back(i);
    }
    std::uniform_int_distribution<size_t> pick(0, monomial.size() - 1);

    for (int trial = 0; trial < 3; ++trial) {
        const int64_t h = monomial[pick(rng)];
        const bool diag = g.support(h) == SupportClass::A;
        const int64_t hinv = g.inverse(h);
        bool ok = true;
        std::string w;
        for (int s = 0; s < kNumSupports && ok; ++s) {
            std::array<int, kNumSupports> image{0, 1, 2, diag ? 3 : 4, diag ? 4 : 3,
                                                diag ? 5 : 6, diag ? 6 : 5};
            GroupVec cs = class_sum(g, static_cast<SupportClass>(s));
            GroupVec conj(g);
            for (int64_t i = 0; i < g.n(); ++i)
                if (cs[i] != 0) conj[g.mul(g.mul(h, i), hinv)] += cs[i];
            if (conj != class_sum(g, static_cast<SupportClass>(image[s]))) {
                ok = false;
                w = std::string("conjugation by element ") + std::to_string(h) +
                    " does not send " + kSupportNames[s] + " onto " +
                    kSupportNames[image[s]];
            }
        }
        r.add("monomial element " + std::to_string(h) + " permutes the class sums as expected",
              ok, w);
    }
    return r;
}

}  // namespace

Report run_full_suite(const OracleConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    if (config.qs.empty()) throw ConfigError("no q values given");
    for (int64_t q : config.qs) validated_q(q);

    Report r;
    r.title = "verification suite";
    r.seed = config.seed;

    // The corrupted table is scoped to the brute-force comparison: that is
    // the check whose detection the fixture demonstrates.
    StructureTable table = structure_table();
    if (config.corrupt_structure)
        table.perturb(idx(SupportClass::C), idx(SupportClass::C), idx(SupportClass::A), 1);

    for (int64_t q : config.qs)
        if (q <= config.groupring_cap) r.merge(verify_product_table(q, table));

    {
        std::string w;
        bool ok = false;
        try {
            ok = interpolate_constants({3, 4, 5}) == structure_table();
        } catch (const Error& e) {
            w = e.what();
        }
        r.add("constants rebuilt from brute samples q=3,4,5 match the coded table", ok, w);
    }

    for (int64_t q : config.qs) {
        r.merge(verify_semisimple_structure(structure_table(), q));
        r.merge(verify_subalgebra_tables(SubalgebraKind::Rank5, q));
        r.merge(verify_subalgebra_tables(SubalgebraKind::Rank4, q));
        r.merge(verify_subalgebra_tables(SubalgebraKind::Rank3, q));
        r.merge(verify_fusion(q));
        r.merge(embedding_relations_check(q, 101));
    }

    for (int64_t q : config.qs)
        if (q >= 4 && q <= config.scheme_cap) {
            r.merge(verify_scheme(q, SchemeVariant::D5));
            r.merge(verify_scheme(q, SchemeVariant::Merged45));
            r.merge(verify_scheme(q, SchemeVariant::Merged12_45));
            r.merge(verify_scheme(q, SchemeVariant::Tilde));
            r.merge(verify_beta(q));
        }
    if (config.corrupt_scheme) {
        int64_t q = 4;
        for (int64_t cand : config.qs)
            if (cand >= 4 && cand <= config.scheme_cap) {
                q = cand;
                break;
            }
        SchemeStructure s = build_scheme(q, SchemeVariant::D5);
        bool dropped = false;
        for (int64_t u = 0; u < s.n && !dropped; ++u)
            for (int64_t v = 0; v < s.n && !dropped; ++v)
                if (s.classes[1].mat[u * s.n + v] == 1) {
                    corrupt_drop_pair(s, 1, u, v);
                    dropped = true;
                }
        Report ax = verify_axioms(s);
        ax.title = "corrupted scheme q=" + std::to_string(q);
        r.merge(ax);
    }

    for (int64_t q : config.qs)
        if (q <= config.groupring_cap) {
            r.merge(character_orthogonality(q));
            r.merge(fx_profile_check(q));
            r.merge(pi_tilde_profile_check(q));
            r.merge(decomposition_report(q));
            if (q % 2 == 1 && q >= 5) r.merge(mean_values_check(q));
        }

    for (int64_t q : config.qs)
        if (q <= config.groupring_cap) {
            if (q % 2 == 1) r.merge(scaled_variant_check(q, GroupKind::PSL2));
            r.merge(scaled_variant_check(q, GroupKind::GL2));
            if (q % 2 == 1) r.merge(scaled_variant_check(q, GroupKind::DetSubgroup, 2));
        }

    r.merge(rank1_support_ring_check(2, 2));
    r.merge(rank1_support_ring_check(2, 3));
    r.merge(rank1_support_ring_check(3, 2));
    for (int64_t q : config.qs)
        if (q <= 5) r.merge(gl2_rank1_counterexample(q));

    std::mt19937_64 rng(static_cast<uint64_t>(config.seed));
    for (int64_t q : config.qs)
        if (q <= config.groupring_cap) r.merge(conjugation_spot_check(q, rng));

    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    r.add("suite wall time " + std::to_string(ms) + "ms", true);
    return r;
}

}  // namespace scring
