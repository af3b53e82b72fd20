#include "scring/schemes.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "scring/checked.hpp"
#include "scring/errors.hpp"

namespace scring {

namespace {

using Table3 = std::vector<std::vector<std::vector<int64_t>>>;

void require_scheme_q(int64_t q) {
    if (q < 4)
        throw UnsupportedField("scheme partitions need q >= 4, got q=" + std::to_string(q));
}

// Cell index of a group element, given its support and whether it is the
// identity. The identity always sits alone in cell 0.
int cell_of(SchemeVariant v, SupportClass s, bool is_identity) {
    if (is_identity) return 0;
    switch (v) {
        case SchemeVariant::D5:
            switch (s) {
                case SupportClass::A: return 1;
                case SupportClass::B: return 2;
                case SupportClass::C: return 3;
                case SupportClass::Dp:
                case SupportClass::Dm: return 4;
                default: return 5;
            }
        case SchemeVariant::Merged45:
            switch (s) {
                case SupportClass::A: return 1;
                case SupportClass::B: return 2;
                case SupportClass::C: return 3;
                default: return 4;
            }
        case SchemeVariant::Merged12_45:
        case SchemeVariant::Tilde:
            switch (s) {
                case SupportClass::A:
                case SupportClass::B: return 1;
                case SupportClass::C: return 2;
                default: return 3;
            }
    }
    throw UnreachablePattern("unhandled scheme variant");
}

std::vector<std::string> cell_labels(SchemeVariant v) {
    switch (v) {
        case SchemeVariant::D5: return {"C0", "C1", "C2", "C3", "C4", "C5"};
        case SchemeVariant::Merged45: return {"C0", "C1", "C2", "C3", "C4+C5"};
        case SchemeVariant::Merged12_45: return {"C0", "C1+C2", "C3", "C4+C5"};
        case SchemeVariant::Tilde: return {"C~0", "C~1", "C~2", "C~3"};
    }
    throw UnreachablePattern("unhandled scheme variant");
}

// Product of two 0/1 matrices; the left factor's ones select rows of the
// right factor, so the cost is n^2 per member of the left class.
std::vector<int64_t> mul01(const std::vector<int32_t>& a, const std::vector<int32_t>& b,
                           int64_t n) {
    std::vector<int64_t> out(static_cast<size_t>(n) * n, 0);
    for (int64_t u = 0; u < n; ++u) {
        const int32_t* arow = a.data() + u * n;
        int64_t* orow = out.data() + u * n;
        for (int64_t w = 0; w < n; ++w) {
            if (!arow[w]) continue;
            const int32_t* brow = b.data() + w * n;
            for (int64_t v = 0; v < n; ++v) orow[v] += brow[v];
        }
    }
    return out;
}

std::string pos_str(int64_t pos, int64_t n) {
    return "(" + std::to_string(pos / n) + "," + std::to_string(pos % n) + ")";
}

// Reads one candidate coefficient per class off the product matrix, then
// checks every entry of the product against that combination.
bool expand_product(const std::vector<SchemeClass>& classes, int64_t n,
                    const std::vector<int64_t>& prod, const std::vector<int64_t>& first_pos,
                    std::vector<int64_t>& coeffs, std::string& witness) {
    const int d1 = static_cast<int>(classes.size());
    coeffs.assign(d1, 0);
    for (int k = 0; k < d1; ++k) coeffs[k] = prod[first_pos[k]];
    for (int64_t pos = 0; pos < n * n; ++pos) {
        int64_t want = 0;
        for (int k = 0; k < d1; ++k)
            if (classes[k].mat[pos]) want += coeffs[k];
        if (prod[pos] != want) {
            witness = "entry " + pos_str(pos, n) + " is " + std::to_string(prod[pos]) +
                      ", the class pattern demands " + std::to_string(want);
            return false;
        }
    }
    witness.clear();
    return true;
}

Table3 make_table(int d1) {
    return Table3(d1, std::vector<std::vector<int64_t>>(d1, std::vector<int64_t>(d1, 0)));
}

// Closed products of the 6-class partition. Only the upper triangle is
// spelled out; the table is commutative.
Table3 d5_closed(int64_t q) {
    Table3 t = make_table(6);
    auto set = [&](int i, int j, std::initializer_list<int64_t> row) {
        std::copy(row.begin(), row.end(), t[i][j].begin());
    };
    for (int j = 0; j < 6; ++j) t[0][j][j] = 1;
    set(1, 1, {q - 2, q - 3, 0, 0, 0, 0});
    for (int j = 2; j < 6; ++j) t[1][j][j] = q - 2;
    set(2, 2, {q - 1, q - 1, 0, 0, 0, 0});
    t[2][3][3] = q - 1;
    t[2][4][5] = q - 1;
    t[2][5][4] = q - 1;
    set(3, 3,
        {(q - 1) * (q - 1) * (q - 2), (q - 1) * (q - 1) * (q - 2), (q - 1) * (q - 1) * (q - 2),
         (q - 1) * (q - 3) * (q - 4), (q - 1) * (q - 2) * (q - 3), (q - 1) * (q - 2) * (q - 3)});
    set(3, 4, {0, 0, 0, 2 * (q - 1) * (q - 3), (q - 1) * (q - 2), (q - 1) * (q - 2)});
    set(3, 5, {0, 0, 0, 2 * (q - 1) * (q - 3), (q - 1) * (q - 2), (q - 1) * (q - 2)});
    set(4, 4,
        {2 * (q - 1) * (q - 1), 2 * (q - 1) * (q - 1), 0, 2 * (q - 1), (q - 1) * (q - 2), q - 1});
    set(4, 5, {0, 0, 2 * (q - 1) * (q - 1), 2 * (q - 1), q - 1, (q - 1) * (q - 2)});
    set(5, 5,
        {2 * (q - 1) * (q - 1), 2 * (q - 1) * (q - 1), 0, 2 * (q - 1), (q - 1) * (q - 2), q - 1});
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < i; ++j) t[i][j] = t[j][i];
    return t;
}

// Closed products of the 4-class partition, transcribed directly rather
// than merged, so the merge route can be cross-checked against it.
Table3 tilde_closed(int64_t q) {
    Table3 t = make_table(4);
    auto set = [&](int i, int j, std::initializer_list<int64_t> row) {
        std::copy(row.begin(), row.end(), t[i][j].begin());
    };
    for (int j = 0; j < 4; ++j) t[0][j][j] = 1;
    set(1, 1, {2 * q - 3, 2 * (q - 2), 0, 0});
    t[1][2][2] = 2 * q - 3;
    t[1][3][3] = 2 * q - 3;
    set(2, 2,
        {(q - 1) * (q - 1) * (q - 2), (q - 1) * (q - 1) * (q - 2), (q - 1) * (q - 3) * (q - 4),
         (q - 1) * (q - 2) * (q - 3)});
    set(2, 3, {0, 0, 4 * (q - 1) * (q - 3), 2 * (q - 1) * (q - 2)});
    set(3, 3, {4 * (q - 1) * (q - 1), 4 * (q - 1) * (q - 1), 8 * (q - 1), 2 * (q - 1) * (q - 1)});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) t[i][j] = t[j][i];
    return t;
}

// Coarsens a closed table along a cell map. Valid only when, inside every
// merged target class, the summed coefficients agree; that is exactly the
// condition for the merged partition to stay a scheme.
Table3 merge_closed(const Table3& base, const std::vector<int>& to, int dn) {
    const int db = static_cast<int>(base.size());
    std::vector<int> rep(dn, -1);
    for (int k = 0; k < db; ++k)
        if (rep[to[k]] < 0) rep[to[k]] = k;
    Table3 out = make_table(dn);
    for (int bi = 0; bi < dn; ++bi)
        for (int bj = 0; bj < dn; ++bj) {
            std::vector<int64_t> tot(db, 0);
            for (int i = 0; i < db; ++i) {
                if (to[i] != bi) continue;
                for (int j = 0; j < db; ++j) {
                    if (to[j] != bj) continue;
                    for (int k = 0; k < db; ++k) tot[k] = ck_add(tot[k], base[i][j][k]);
                }
            }
            for (int k = 0; k < db; ++k) {
                if (tot[k] != tot[rep[to[k]]])
                    throw Error("merged cells do not close: coefficient totals differ inside "
                                "a target class");
                out[bi][bj][to[k]] = tot[k];
            }
        }
    return out;
}

std::string vec_str(const std::vector<int64_t>& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

}  // namespace

const char* variant_name(SchemeVariant v) {
    switch (v) {
        case SchemeVariant::D5: return "d5";
        case SchemeVariant::Merged45: return "merged45";
        case SchemeVariant::Merged12_45: return "merged12_45";
        case SchemeVariant::Tilde: return "tilde";
    }
    throw UnreachablePattern("unhandled scheme variant");
}

SchemeStructure build_scheme(int64_t q, SchemeVariant variant) {
    require_scheme_q(q);
    Field f(q);
    GroupTable g(f, GroupKind::SL2);

    SchemeStructure s;
    s.q = q;
    s.variant = variant;
    s.n = g.n();
    const auto labels = cell_labels(variant);
    const int d1 = static_cast<int>(labels.size());
    const int64_t n = s.n;

    std::vector<int8_t> cell(n);
    for (int64_t e = 0; e < n; ++e)
        cell[e] = static_cast<int8_t>(cell_of(variant, g.support(e), e == g.identity()));

    s.classes.resize(d1);
    for (int k = 0; k < d1; ++k) {
        s.classes[k].label = labels[k];
        s.classes[k].mat.assign(static_cast<size_t>(n) * n, 0);
    }
    for (int64_t u = 0; u < n; ++u)
        for (int64_t v = 0; v < n; ++v)
            s.classes[cell[g.mul(u, g.inverse(v))]].mat[u * n + v] = 1;

    std::vector<int64_t> first_pos(d1, -1);
    for (int k = 0; k < d1; ++k) {
        const auto& m = s.classes[k].mat;
        auto it = std::find(m.begin(), m.end(), 1);
        if (it == m.end()) throw Error("scheme class " + labels[k] + " is empty");
        first_pos[k] = it - m.begin();
    }

    s.constants.assign(d1, std::vector<std::vector<int64_t>>(d1));
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j) {
            auto prod = mul01(s.classes[i].mat, s.classes[j].mat, n);
            std::string w;
            if (!expand_product(s.classes, n, prod, first_pos, s.constants[i][j], w))
                throw Error("product " + labels[i] + "*" + labels[j] + " does not close: " + w);
        }
    return s;
}

Report verify_axioms(const SchemeStructure& s) {
    Report r;
    r.title = std::string(variant_name(s.variant)) + " scheme q=" + std::to_string(s.q);
    const int64_t n = s.n;
    const int d1 = static_cast<int>(s.classes.size());

    {
        bool ok = true;
        std::string w;
        for (int k = 0; k < d1 && ok; ++k)
            for (int64_t pos = 0; pos < n * n; ++pos) {
                int32_t v = s.classes[k].mat[pos];
                if (v != 0 && v != 1) {
                    ok = false;
                    w = s.classes[k].label + " entry " + pos_str(pos, n) + " is " +
                        std::to_string(v);
                    break;
                }
            }
        r.add("entries are 0/1", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int64_t pos = 0; pos < n * n && ok; ++pos) {
            int32_t want = (pos / n == pos % n) ? 1 : 0;
            if (s.classes[0].mat[pos] != want) {
                ok = false;
                w = "entry " + pos_str(pos, n) + " is " + std::to_string(s.classes[0].mat[pos]);
            }
        }
        r.add(s.classes[0].label + " is the identity relation", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (int64_t pos = 0; pos < n * n && ok; ++pos) {
            int cnt = 0;
            for (int k = 0; k < d1; ++k) cnt += s.classes[k].mat[pos] ? 1 : 0;
            if (cnt != 1) {
                ok = false;
                w = "pair " + pos_str(pos, n) + " is covered by " + std::to_string(cnt) +
                    " classes";
            }
        }
        r.add("classes partition the all-ones matrix", ok, w);
    }
    for (int k = 0; k < d1; ++k) {
        bool ok = true;
        std::string w;
        for (int64_t u = 0; u < n && ok; ++u)
            for (int64_t v = u + 1; v < n; ++v)
                if (s.classes[k].mat[u * n + v] != s.classes[k].mat[v * n + u]) {
                    ok = false;
                    w = "entries " + pos_str(u * n + v, n) + " and " + pos_str(v * n + u, n) +
                        " differ";
                    break;
                }
        r.add(s.classes[k].label + " is symmetric", ok, w);
    }

    std::vector<int64_t> first_pos(d1, -1);
    for (int k = 0; k < d1; ++k) {
        const auto& m = s.classes[k].mat;
        auto it = std::find(m.begin(), m.end(), 1);
        if (it == m.end()) {
            r.add(s.classes[k].label + " is nonempty", false, "class has no members");
            return r;
        }
        first_pos[k] = it - m.begin();
    }

    for (int i = 0; i < d1; ++i)
        for (int j = i; j < d1; ++j) {
            auto pij = mul01(s.classes[i].mat, s.classes[j].mat, n);
            std::vector<int64_t> coeffs;
            std::string w;
            bool ok = expand_product(s.classes, n, pij, first_pos, coeffs, w);
            r.add(s.classes[i].label + "*" + s.classes[j].label + " closes over the classes", ok,
                  w);
            if (i == j) continue;
            auto pji = mul01(s.classes[j].mat, s.classes[i].mat, n);
            bool okc = true;
            std::string wc;
            for (int64_t pos = 0; pos < n * n; ++pos)
                if (pij[pos] != pji[pos]) {
                    okc = false;
                    wc = "entry " + pos_str(pos, n) + ": " + std::to_string(pij[pos]) + " vs " +
                         std::to_string(pji[pos]);
                    break;
                }
            r.add(s.classes[i].label + " and " + s.classes[j].label + " commute", okc, wc);
        }
    return r;
}

std::vector<std::vector<std::vector<int64_t>>> expected_constants(int64_t q,
                                                                  SchemeVariant variant) {
    require_scheme_q(q);
    switch (variant) {
        case SchemeVariant::D5: return d5_closed(q);
        case SchemeVariant::Tilde: return tilde_closed(q);
        case SchemeVariant::Merged45: return merge_closed(d5_closed(q), {0, 1, 2, 3, 4, 4}, 5);
        case SchemeVariant::Merged12_45:
            return merge_closed(d5_closed(q), {0, 1, 1, 2, 3, 3}, 4);
    }
    throw UnreachablePattern("unhandled scheme variant");
}

std::array<Mat4, 4> tilde_mult_matrices(int64_t q) {
    require_scheme_q(q);
    Table3 t = tilde_closed(q);
    std::array<Mat4, 4> m{};
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k)
            for (int i = 0; i < 4; ++i) m[j][k][i] = t[j][i][k];
    return m;
}

BetaSystem beta_system(int64_t q) {
    require_scheme_q(q);
    const int64_t q1 = q - 1;
    BetaSystem b;
    b.beta[0] = {Rational(1, q * q * q - q), Rational(1, q * q * q - q),
                 Rational(1, q * q * q - q), Rational(1, q * q * q - q)};
    b.beta[1] = {Rational(q - 2, 2 * (q * q - q)), Rational(q - 2, 2 * (q * q - q)),
                 Rational(1, q * q1 * q1), Rational(-(q - 2), 2 * q * q1 * q1)};
    b.beta[2] = {Rational(2 * q - 3, 2 * q1), Rational(-1, 2 * q1), Rational(0), Rational(0)};
    b.beta[3] = {Rational(1, q * q - 1), Rational(1, q * q - 1),
                 Rational(-2, q1 * q1 * (q + 1)), Rational(q - 3, 2 * q1 * q1 * (q + 1))};
    b.eigen = {{{1, 2 * q - 3, q1 * q1 * (q - 2), 4 * q1 * q1},
                {1, 2 * q - 3, 2 * q1, 4 * (1 - q)},
                {1, -1, 0, 0},
                {1, 2 * q - 3, 2 * (1 - q) * (q - 2), 2 * q1 * (q - 3)}}};
    b.dims = {1, (q + 1) * (q - 2) / 2, q * (2 * q - 3) * (q + 1) / 2, q};
    return b;
}

Report verify_scheme(int64_t q, SchemeVariant variant) {
    SchemeStructure s = build_scheme(q, variant);
    Report r = verify_axioms(s);
    const Table3 want = expected_constants(q, variant);
    const int d1 = static_cast<int>(s.classes.size());
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j) {
            bool ok = s.constants[i][j] == want[i][j];
            std::string w;
            if (!ok)
                w = "extracted " + vec_str(s.constants[i][j]) + ", closed form " +
                    vec_str(want[i][j]);
            r.add(s.classes[i].label + "*" + s.classes[j].label + " matches the closed form", ok,
                  w);
        }
    if (variant == SchemeVariant::D5) {
        // C1 is q-2 elements, not a scalar: its square keeps a C1 component
        // instead of collapsing to (q-2)^2 C0.
        std::vector<int64_t> scalar_square(6, 0);
        scalar_square[0] = (q - 2) * (q - 2);
        bool differs = s.constants[1][1] != scalar_square;
        r.add("C1*C1 is not the scalar square (q-2)^2*C0", differs,
              "C1*C1 = " + vec_str(s.constants[1][1]));
    }
    return r;
}

Report verify_beta(int64_t q) {
    const BetaSystem bs = beta_system(q);
    const Table3 t = tilde_closed(q);
    Report r;
    r.title = "beta system q=" + std::to_string(q);

    using V4 = std::array<Rational, 4>;
    auto mul4 = [&](const V4& x, const V4& y) {
        V4 out{Rational(0), Rational(0), Rational(0), Rational(0)};
        for (int i = 0; i < 4; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < 4; ++j) {
                if (y[j].is_zero()) continue;
                for (int k = 0; k < 4; ++k)
                    out[k] += x[i] * y[j] * Rational(t[i][j][k]);
            }
        }
        return out;
    };
    auto str4 = [](const V4& v) {
        return "(" + v[0].str() + ", " + v[1].str() + ", " + v[2].str() + ", " + v[3].str() + ")";
    };
    auto scale4 = [](const Rational& c, const V4& v) {
        return V4{c * v[0], c * v[1], c * v[2], c * v[3]};
    };

    for (int i = 0; i < 4; ++i) {
        V4 sq = mul4(bs.beta[i], bs.beta[i]);
        r.add("beta" + std::to_string(i) + " is idempotent", sq == bs.beta[i],
              "square is " + str4(sq));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            V4 p = mul4(bs.beta[i], bs.beta[j]);
            bool ok = p[0].is_zero() && p[1].is_zero() && p[2].is_zero() && p[3].is_zero();
            r.add("beta" + std::to_string(i) + "*beta" + std::to_string(j) + " = 0", ok,
                  "product is " + str4(p));
        }
    {
        V4 sum{Rational(0), Rational(0), Rational(0), Rational(0)};
        for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) sum[k] += bs.beta[i][k];
        V4 unit{Rational(1), Rational(0), Rational(0), Rational(0)};
        r.add("beta0+..+beta3 = C~0", sum == unit, "sum is " + str4(sum));
    }
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            V4 ej{Rational(0), Rational(0), Rational(0), Rational(0)};
            ej[j] = Rational(1);
            V4 lhs = mul4(ej, bs.beta[i]);
            V4 rhs = scale4(Rational(bs.eigen[i][j]), bs.beta[i]);
            r.add("C~" + std::to_string(j) + " acts on beta" + std::to_string(i) + " as " +
                      std::to_string(bs.eigen[i][j]),
                  lhs == rhs, "got " + str4(lhs) + ", want " + str4(rhs));
        }

    const int64_t order = q * q * q - q;
    {
        int64_t sum = 0;
        for (int i = 0; i < 4; ++i) sum += bs.dims[i];
        r.add("eigenspace dimensions sum to q^3-q", sum == order,
              "sum is " + std::to_string(sum));
    }
    for (int i = 0; i < 4; ++i) {
        Rational d = Rational(order) * bs.beta[i][0];
        bool ok = d.is_integer() && d.num() == bs.dims[i];
        r.add("dim(beta" + std::to_string(i) + ") = (q^3-q) * coefficient of C~0", ok,
              "(q^3-q)*coeff = " + d.str() + ", table dim = " + std::to_string(bs.dims[i]));
    }

    // Matrix-level certificates: the identity column of each beta matrix is
    // an explicit integer kernel vector of M(C~j) - lambda*I.
    SchemeStructure s = build_scheme(q, SchemeVariant::Tilde);
    const int64_t n = s.n;
    for (int i = 0; i < 4; ++i) {
        int64_t den = 1;
        for (int k = 0; k < 4; ++k) den = std::lcm(den, bs.beta[i][k].den());
        std::array<int64_t, 4> scaled{};
        for (int k = 0; k < 4; ++k) scaled[k] = bs.beta[i][k].num() * (den / bs.beta[i][k].den());

        std::vector<int64_t> wv(n, 0);
        for (int k = 0; k < 4; ++k)
            for (int64_t u = 0; u < n; ++u)
                if (s.classes[k].mat[u * n]) wv[u] += scaled[k];
        bool nonzero = std::any_of(wv.begin(), wv.end(), [](int64_t x) { return x != 0; });
        r.add("beta" + std::to_string(i) + " eigenvector witness is nonzero", nonzero,
              "all entries vanish");
        if (!nonzero) continue;

        for (int j = 0; j < 4; ++j) {
            const int64_t lam = bs.eigen[i][j];
            bool ok = true;
            std::string w;
            for (int64_t u = 0; u < n && ok; ++u) {
                int64_t acc = 0;
                const int32_t* row = s.classes[j].mat.data() + u * n;
                for (int64_t v = 0; v < n; ++v)
                    if (row[v]) acc += wv[v];
                if (acc != lam * wv[u]) {
                    ok = false;
                    w = "row " + std::to_string(u) + ": M*w = " + std::to_string(acc) +
                        ", lambda*w = " + std::to_string(lam * wv[u]);
                }
            }
            r.add("(M(C~" + std::to_string(j) + ") - " + std::to_string(lam) +
                      "*I) kills the beta" + std::to_string(i) + " witness",
                  ok, w);
        }
    }
    return r;
}

void corrupt_drop_pair(SchemeStructure& s, int class_index, int64_t u, int64_t v) {
    if (class_index < 0 || class_index >= static_cast<int>(s.classes.size()))
        throw InvalidSpec("class index " + std::to_string(class_index) + " out of range");
    if (u < 0 || u >= s.n || v < 0 || v >= s.n)
        throw InvalidSpec("pair index out of range");
    int32_t& e = s.classes[class_index].mat[u * s.n + v];
    if (e != 1)
        throw InvalidSpec("pair (" + std::to_string(u) + "," + std::to_string(v) +
                          ") is not in class " + s.classes[class_index].label);
    e = 0;
}

}  // namespace scring
