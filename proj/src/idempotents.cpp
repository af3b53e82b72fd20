#include "scring/idempotents.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "scring/checked.hpp"
#include "scring/errors.hpp"

namespace scring {

namespace {

constexpr int iA = idx(SupportClass::A);
constexpr int iB = idx(SupportClass::B);
constexpr int iC = idx(SupportClass::C);
constexpr int iDp = idx(SupportClass::Dp);
constexpr int iDm = idx(SupportClass::Dm);
constexpr int iEp = idx(SupportClass::Ep);
constexpr int iEm = idx(SupportClass::Em);

void require_q(int64_t q) {
    if (q <= 2)
        throw UnsupportedField("support-class ring needs q > 2, got " + std::to_string(q));
}

RVec7 combined(std::initializer_list<int> parts) {
    RVec7 v{};
    for (int p : parts) v[p] = Rational(1);
    return v;
}

// Row-reduce over the rationals; returns the rank.
int rref(std::vector<RVec7>& rows) {
    int rank = 0;
    for (int col = 0; col < kNumSupports && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (!rows[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        Rational inv = Rational(1) / rows[rank][col];
        for (int c = 0; c < kNumSupports; ++c) rows[rank][c] *= inv;
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            Rational f = rows[r][col];
            for (int c = 0; c < kNumSupports; ++c) rows[r][c] -= f * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

bool in_span(std::vector<RVec7> base, const RVec7& v) {
    int r0 = rref(base);
    base.push_back(v);
    return rref(base) == r0;
}

int64_t norm_mod(int64_t a, int64_t r) {
    int64_t m = a % r;
    return m < 0 ? m + r : m;
}

int64_t mulmod(int64_t a, int64_t b, int64_t r) {
    using u128 = unsigned __int128;
    return static_cast<int64_t>(static_cast<u128>(a) * static_cast<u128>(b) %
                                static_cast<u128>(r));
}

int64_t invmod(int64_t a, int64_t m) {
    int64_t r0 = m, r1 = norm_mod(a, m);
    int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        int64_t k = r0 / r1;
        int64_t r2 = r0 - k * r1;
        int64_t s2 = s0 - k * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0 != 1)
        throw NotCoprime("no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
    return norm_mod(s0, m);
}

bool is_prime_power(int64_t r) {
    if (r < 2) return false;
    for (int64_t p = 2; p * p <= r; ++p)
        if (r % p == 0) {
            while (r % p == 0) r /= p;
            return r == 1;
        }
    return true;
}

}  // namespace

RVec7 pi(int i, int64_t q) {
    require_q(q);
    RVec7 v{};
    switch (i) {
        case 1: {
            Rational c(1, q * q * q - q);
            for (int k = 0; k < kNumSupports; ++k) v[k] = c;
            break;
        }
        case 2: {
            Rational ab(q - 2, 2 * (q * q - q));
            v[iA] = ab;
            v[iB] = ab;
            v[iC] = Rational(1, q * (q - 1) * (q - 1));
            Rational de(-(q - 2), 2 * q * (q - 1) * (q - 1));
            v[iDp] = v[iDm] = v[iEp] = v[iEm] = de;
            break;
        }
        case 3: {
            v[iA] = Rational(1, 2 * (q + 1));
            v[iB] = Rational(-1, 2 * (q + 1));
            Rational d(-1, 2 * (q * q - 1));
            v[iDp] = v[iDm] = d;
            v[iEp] = v[iEm] = -d;
            break;
        }
        case 4: {
            int64_t n = (q + 1) * (q - 1) * (q - 1);
            v[iA] = Rational(2 * (q - 1), n);
            v[iC] = Rational(-2, n);
            v[iDp] = v[iDm] = Rational(q - 2, n);
            v[iEp] = v[iEm] = Rational(-1, n);
            break;
        }
        default:
            throw InvalidSpec("central idempotent index must be in 1..4, got " +
                              std::to_string(i));
    }
    return v;
}

RVec7 matrix_unit(int i, int j, int64_t q) {
    require_q(q);
    if (i < 1 || i > 2 || j < 1 || j > 2)
        throw InvalidSpec("matrix-unit indices must be in 1..2, got (" + std::to_string(i) +
                          "," + std::to_string(j) + ")");
    RVec7 v{};
    const int64_t q21 = q * q - 1;
    if (i == 1 && j == 1) {
        v[iA] = Rational(1, q21);
        v[iB] = Rational(-1, q21);
        Rational d(1, 2 * q21);
        v[iDp] = v[iDm] = d;
        v[iEp] = v[iEm] = -d;
    } else if (i == 2 && j == 2) {
        v[iA] = v[iB] = Rational(1, q21);
        int64_t n = (q + 1) * (q - 1) * (q - 1);
        v[iC] = Rational(-2, n);
        v[iDp] = v[iDm] = v[iEp] = v[iEm] = Rational(q - 3, 2 * n);
    } else if (i == 1 && j == 2) {
        Rational c(1, 2 * (q - 1) * (q - 1));
        v[iDp] = v[iEp] = c;
        v[iDm] = v[iEm] = -c;
    } else {
        Rational c(1, 2 * q21);
        v[iDp] = v[iEm] = c;
        v[iDm] = v[iEp] = -c;
    }
    return v;
}

Rational character_value(const StructureTable& t, const RVec7& idem, const RVec7& x,
                         int64_t q) {
    RVec7 prod = sc_mul(t, idem, x, q);
    int pivot = -1;
    for (int k = 0; k < kNumSupports; ++k)
        if (!idem[k].is_zero()) {
            pivot = k;
            break;
        }
    if (pivot < 0) throw NotRankOne("zero vector spans no ideal");
    Rational lambda = prod[pivot] / idem[pivot];
    for (int k = 0; k < kNumSupports; ++k)
        if (prod[k] != lambda * idem[k])
            throw NotRankOne("product " + str(prod) + " is not a scalar multiple of " +
                             str(idem));
    return lambda;
}

Rational character_value(const StructureTable& t, const RVec7& idem, SupportClass x,
                         int64_t q) {
    return character_value(t, idem, to_rational(basis_vec(x)), q);
}

IdempotentSystem subalgebra_system(SubalgebraKind kind, int64_t q) {
    require_q(q);
    const RVec7 vI = combined({iA, iB});
    const RVec7 vC = combined({iC});
    const RVec7 vD = combined({iDp, iDm});
    const RVec7 vE = combined({iEp, iEm});
    const RVec7 vF = vD + vE;

    IdempotentSystem s;
    s.kind = kind;
    switch (kind) {
        case SubalgebraKind::Rank5:
            s.member_names = {"pi1", "pi2", "pi3", "M11", "M22"};
            s.members = {pi(1, q), pi(2, q), pi(3, q), matrix_unit(1, 1, q),
                         matrix_unit(2, 2, q)};
            s.basis_names = {"A", "B", "C", "D", "E"};
            s.basis = {combined({iA}), combined({iB}), vC, vD, vE};
            s.unit = identity_vec(q);
            break;
        case SubalgebraKind::Rank4:
            s.member_names = {"pi1", "pi2", "pi3+M11", "M22"};
            s.members = {pi(1, q), pi(2, q), pi(3, q) + matrix_unit(1, 1, q),
                         matrix_unit(2, 2, q)};
            s.basis_names = {"A", "B", "C", "F"};
            s.basis = {combined({iA}), combined({iB}), vC, vF};
            s.unit = identity_vec(q);
            break;
        case SubalgebraKind::Rank3:
            s.member_names = {"pi1", "pi2", "M22"};
            s.members = {pi(1, q), pi(2, q), matrix_unit(2, 2, q)};
            s.basis_names = {"I", "C", "F"};
            s.basis = {vI, vC, vF};
            s.unit = Rational(1, 2 * (q - 1)) * vI;
            break;
    }
    return s;
}

FusionTensor fusion_constants(int64_t q) {
    require_q(q);
    const StructureTable& t = structure_table();
    const RVec7 base[3] = {combined({iA, iB}), combined({iC}),
                           combined({iDp, iDm, iEp, iEm})};
    const Rational s2[3] = {Rational(1, 4 * (q - 1) * (q - 1)),
                            Rational(1, 2 * (q - 1) * (q - 1) * (q - 1) * (q - 2)),
                            Rational(1, 8 * (q - 1) * (q - 1) * (q - 1))};
    FusionTensor f{};
    for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) {
            RVec7 prod = sc_mul(t, base[x], base[y], q);
            if (prod[iA] != prod[iB] || prod[iDp] != prod[iDm] || prod[iDp] != prod[iEp] ||
                prod[iDp] != prod[iEm])
                throw Error("rank-3 product left the I,C,F span: " + str(prod));
            const Rational c[3] = {prod[iA], prod[iC], prod[iDp]};
            for (int z = 0; z < 3; ++z) {
                f.square[x][y][z] = c[z] * c[z] * s2[x] * s2[y] / s2[z];
                double mag = std::sqrt(f.square[x][y][z].to_double());
                f.value[x][y][z] = c[z].num() < 0 ? -mag : mag;
            }
        }
    }
    return f;
}

Rational projector_trace(int i, int64_t q) {
    return Rational(q * q * q - q) * pi(i, q)[iA];
}

Report embedding_relations_check(int64_t q, int64_t r) {
    require_q(q);
    if (!is_prime_power(r))
        throw InvalidSpec("modulus must be a prime power >= 2, got " + std::to_string(r));
    const int64_t excl = 2 * (q * q - 1);
    if (std::gcd(r, excl) != 1)
        throw NotCoprime("gcd(" + std::to_string(r) + ", 2(q^2-1) = " + std::to_string(excl) +
                         ") != 1");

    auto reduce = [&](const RVec7& v) {
        IVec7 out{};
        for (int k = 0; k < kNumSupports; ++k) {
            int64_t num = norm_mod(v[k].num(), r);
            int64_t den_inv = invmod(v[k].den(), r);
            out[k] = mulmod(num, den_inv, r);
        }
        return out;
    };
    IVec7 m[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = reduce(matrix_unit(i + 1, j + 1, q));

    const StructureTable& t = structure_table();
    Report rep;
    rep.title = "matrix-unit relations mod " + std::to_string(r) + ", q=" + std::to_string(q);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    IVec7 got = sc_mul_mod(t, m[i][j], m[k][l], q, r);
                    IVec7 want = (j == k) ? m[i][l] : IVec7{};
                    auto mu = [](int a, int b) {
                        return "M" + std::to_string(a + 1) + std::to_string(b + 1);
                    };
                    std::string name = mu(i, j) + "*" + mu(k, l) + " = " +
                                       (j == k ? mu(i, l) : std::string("0"));
                    std::string witness;
                    if (got != want) {
                        for (int c = 0; c < kNumSupports; ++c)
                            if (got[c] != want[c]) {
                                witness = std::string("coeff of ") + kSupportNames[c] +
                                          ": got " + std::to_string(got[c]) + ", want " +
                                          std::to_string(want[c]);
                                break;
                            }
                    }
                    rep.add(name, got == want, witness);
                }
    return rep;
}

Report verify_semisimple_structure(const StructureTable& t, int64_t q) {
    require_q(q);
    Report rep;
    rep.title = "semisimple structure q=" + std::to_string(q);

    std::vector<RVec7> p;
    for (int i = 1; i <= 4; ++i) p.push_back(pi(i, q));
    const RVec7 id = identity_vec(q);

    for (int i = 0; i < 4; ++i) {
        RVec7 sq = sc_mul(t, p[i], p[i], q);
        rep.add("pi" + std::to_string(i + 1) + " idempotent", sq == p[i],
                "pi^2 = " + str(sq) + ", pi = " + str(p[i]));
    }
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            if (i == j) continue;
            RVec7 prod = sc_mul(t, p[i], p[j], q);
            rep.add("pi" + std::to_string(i + 1) + "*pi" + std::to_string(j + 1) + " = 0",
                    is_zero(prod), "got " + str(prod));
        }
    for (int i = 0; i < 4; ++i) {
        bool central = true;
        std::string witness;
        for (int x = 0; x < kNumSupports && central; ++x) {
            RVec7 ex = to_rational(basis_vec(static_cast<SupportClass>(x)));
            if (sc_mul(t, p[i], ex, q) != sc_mul(t, ex, p[i], q)) {
                central = false;
                witness = std::string("does not commute with ") + kSupportNames[x];
            }
        }
        rep.add("pi" + std::to_string(i + 1) + " central", central, witness);
    }
    {
        RVec7 sum = p[0] + p[1] + p[2] + p[3];
        rep.add("pi1+pi2+pi3+pi4 = identity", sum == id, "got " + str(sum));
    }

    RVec7 m[2][2];
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = matrix_unit(i + 1, j + 1, q);
    rep.add("M11+M22 = pi4", m[0][0] + m[1][1] == p[3],
            "got " + str(m[0][0] + m[1][1]) + ", pi4 = " + str(p[3]));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    RVec7 got = sc_mul(t, m[i][j], m[k][l], q);
                    RVec7 want = (j == k) ? m[i][l] : RVec7{};
                    auto mu = [](int a, int b) {
                        return "M" + std::to_string(a + 1) + std::to_string(b + 1);
                    };
                    rep.add(mu(i, j) + "*" + mu(k, l) + " = " +
                                (j == k ? mu(i, l) : std::string("0")),
                            got == want, "got " + str(got));
                }

    // The three rational characters, columns in basis order.
    auto col = [&](int i, int x) -> Rational {
        switch (i) {
            case 0:  // augmentation: class sizes
                if (x == iA || x == iB) return Rational(q - 1);
                if (x == iC) return Rational((q - 1) * (q - 1) * (q - 2));
                return Rational((q - 1) * (q - 1));
            case 1:
                if (x == iA || x == iB) return Rational(q - 1);
                if (x == iC) return Rational(2 * (q - 1));
                return Rational(1 - q);
            default:
                if (x == iA) return Rational(q - 1);
                if (x == iB) return Rational(1 - q);
                if (x == iC) return Rational(0);
                if (x == iDp || x == iDm) return Rational(1 - q);
                return Rational(q - 1);
        }
    };
    for (int i = 0; i < 3; ++i)
        for (int x = 0; x < kNumSupports; ++x) {
            std::string name = "character pi" + std::to_string(i + 1) + "(" +
                               kSupportNames[x] + ")";
            try {
                Rational got =
                    character_value(t, p[i], static_cast<SupportClass>(x), q);
                Rational want = col(i, x);
                rep.add(name, got == want,
                        "got " + got.str() + ", want " + want.str());
            } catch (const NotRankOne& e) {
                rep.add(name, false, e.what());
            }
        }

    // Displayed non-central projectors and their B-eigenvalues.
    {
        RVec7 ab{};
        ab[iA] = Rational(1, 2 * (q - 1));
        ab[iB] = -ab[iA];
        RVec7 proj = p[2] + m[0][0];
        rep.add("pi3+M11 = (A-B)/(2(q-1))", proj == ab, "got " + str(proj));
        rep.add("pi3+M11 idempotent", sc_mul(t, proj, proj, q) == proj, str(proj));
        RVec7 eb = to_rational(basis_vec(SupportClass::B));
        rep.add("B acts as 1-q on pi3+M11",
                sc_mul(t, eb, proj, q) == Rational(1 - q) * proj,
                "got " + str(sc_mul(t, eb, proj, q)));

        RVec7 apb{};
        apb[iA] = apb[iB] = Rational(1, 2 * (q - 1));
        RVec7 proj2 = p[0] + p[1] + m[1][1];
        rep.add("pi1+pi2+M22 = (A+B)/(2(q-1))", proj2 == apb, "got " + str(proj2));
        rep.add("pi1+pi2+M22 idempotent", sc_mul(t, proj2, proj2, q) == proj2, str(proj2));
        rep.add("B acts as q-1 on pi1+pi2+M22",
                sc_mul(t, eb, proj2, q) == Rational(q - 1) * proj2,
                "got " + str(sc_mul(t, eb, proj2, q)));
    }

    // Dimension bookkeeping: the corner pi4 * SC * pi4 is exactly the span of
    // the four independent matrix units, so the algebra splits as 1+1+1+4.
    {
        std::vector<RVec7> units{m[0][0], m[0][1], m[1][0], m[1][1]};
        std::vector<RVec7> probe = units;
        rep.add("matrix units independent", rref(probe) == 4, "rank < 4");
        bool closed = true;
        std::string witness;
        for (int x = 0; x < kNumSupports && closed; ++x) {
            RVec7 ex = to_rational(basis_vec(static_cast<SupportClass>(x)));
            RVec7 corner = sc_mul(t, sc_mul(t, p[3], ex, q), p[3], q);
            if (!in_span(units, corner)) {
                closed = false;
                witness = std::string("pi4*") + kSupportNames[x] + "*pi4 = " + str(corner);
            }
        }
        rep.add("pi4 corner spanned by matrix units", closed, witness);
    }
    return rep;
}

Report verify_subalgebra_tables(SubalgebraKind kind, int64_t q) {
    const StructureTable& t = structure_table();
    IdempotentSystem s = subalgebra_system(kind, q);
    const int n = static_cast<int>(s.members.size());

    Report rep;
    switch (kind) {
        case SubalgebraKind::Rank5: rep.title = "rank-5 subalgebra q=" + std::to_string(q); break;
        case SubalgebraKind::Rank4: rep.title = "rank-4 subalgebra q=" + std::to_string(q); break;
        case SubalgebraKind::Rank3: rep.title = "rank-3 subalgebra q=" + std::to_string(q); break;
    }

    for (int i = 0; i < n; ++i) {
        RVec7 sq = sc_mul(t, s.members[i], s.members[i], q);
        rep.add(s.member_names[i] + " idempotent", sq == s.members[i], "got " + str(sq));
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RVec7 prod = sc_mul(t, s.members[i], s.members[j], q);
            RVec7 prod2 = sc_mul(t, s.members[j], s.members[i], q);
            rep.add(s.member_names[i] + "*" + s.member_names[j] + " = 0 both ways",
                    is_zero(prod) && is_zero(prod2), "got " + str(prod) + " / " + str(prod2));
        }
    {
        RVec7 sum{};
        for (const auto& mv : s.members) sum = sum + mv;
        rep.add("members sum to the subalgebra unit", sum == s.unit,
                "got " + str(sum) + ", unit " + str(s.unit));
        bool neutral = true;
        std::string witness;
        for (int b = 0; b < static_cast<int>(s.basis.size()) && neutral; ++b) {
            if (sc_mul(t, s.unit, s.basis[b], q) != s.basis[b] ||
                sc_mul(t, s.basis[b], s.unit, q) != s.basis[b]) {
                neutral = false;
                witness = "unit does not fix " + s.basis_names[b];
            }
        }
        rep.add("unit is neutral on the basis", neutral, witness);
    }
    for (int i = 0; i < n; ++i)
        rep.add(s.member_names[i] + " inside the reduced basis span",
                in_span(s.basis, s.members[i]), str(s.members[i]));

    // Closed-form character tables, row = member, column = basis element.
    auto expected = [&](int i, int b) -> Rational {
        const int64_t c1 = q - 1;
        switch (kind) {
            case SubalgebraKind::Rank5: {
                const int64_t tab[5][5] = {
                    {c1, c1, c1 * c1 * (q - 2), 2 * c1 * c1, 2 * c1 * c1},
                    {c1, c1, 2 * c1, -2 * c1, -2 * c1},
                    {c1, -c1, 0, -2 * c1, 2 * c1},
                    {c1, -c1, 0, c1 * c1, -c1 * c1},
                    {c1, c1, -2 * c1 * (q - 2), c1 * (q - 3), c1 * (q - 3)}};
                return Rational(tab[i][b]);
            }
            case SubalgebraKind::Rank4: {
                const int64_t tab[4][4] = {
                    {c1, c1, c1 * c1 * (q - 2), 4 * c1 * c1},
                    {c1, c1, 2 * c1, -4 * c1},
                    {c1, -c1, 0, 0},
                    {c1, c1, -2 * c1 * (q - 2), 2 * c1 * (q - 3)}};
                return Rational(tab[i][b]);
            }
            default: {
                const int64_t tab[3][3] = {
                    {2 * c1, c1 * c1 * (q - 2), 4 * c1 * c1},
                    {2 * c1, 2 * c1, -4 * c1},
                    {2 * c1, -2 * c1 * (q - 2), 2 * c1 * (q - 3)}};
                return Rational(tab[i][b]);
            }
        }
    };
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < static_cast<int>(s.basis.size()); ++b) {
            std::string name =
                "character " + s.member_names[i] + "(" + s.basis_names[b] + ")";
            try {
                Rational got = character_value(t, s.members[i], s.basis[b], q);
                Rational want = expected(i, b);
                rep.add(name, got == want, "got " + got.str() + ", want " + want.str());
            } catch (const NotRankOne& e) {
                rep.add(name, false, e.what());
            }
        }

    if (kind == SubalgebraKind::Rank3) {
        const RVec7& vI = s.basis[0];
        const RVec7& vC = s.basis[1];
        const RVec7& vF = s.basis[2];
        const Rational c1(q - 1);
        for (int b = 0; b < 3; ++b) {
            RVec7 want = Rational(2 * (q - 1)) * s.basis[b];
            bool ok = sc_mul(t, vI, s.basis[b], q) == want &&
                      sc_mul(t, s.basis[b], vI, q) == want;
            rep.add("I*" + s.basis_names[b] + " = 2(q-1)" + s.basis_names[b], ok, "");
        }
        RVec7 cc = sc_mul(t, vC, vC, q);
        RVec7 cc_want = Rational(c1 * c1 * Rational(q - 2)) * vI +
                        Rational(c1 * Rational((q - 3) * (q - 4))) * vC +
                        Rational(c1 * Rational((q - 2) * (q - 3))) * vF;
        rep.add("C^2 = (q-1)^2(q-2)I + (q-1)(q-3)(q-4)C + (q-1)(q-2)(q-3)F", cc == cc_want,
                "got " + str(cc));
        RVec7 cf = sc_mul(t, vC, vF, q);
        RVec7 fc = sc_mul(t, vF, vC, q);
        RVec7 cf_want = Rational(4 * (q - 1) * (q - 3)) * vC +
                        Rational(2 * (q - 1) * (q - 2)) * vF;
        rep.add("CF = FC = 4(q-1)(q-3)C + 2(q-1)(q-2)F", cf == cf_want && fc == cf_want,
                "got " + str(cf) + " / " + str(fc));
        RVec7 ff = sc_mul(t, vF, vF, q);
        RVec7 ff_want = Rational(4 * (q - 1) * (q - 1)) * vI + Rational(8 * (q - 1)) * vC +
                        Rational(2 * (q - 1) * (q - 1)) * vF;
        rep.add("F^2 = 4(q-1)^2I + 8(q-1)C + 2(q-1)^2F", ff == ff_want, "got " + str(ff));
    }
    return rep;
}

Report verify_fusion(int64_t q) {
    FusionTensor f = fusion_constants(q);
    Report rep;
    rep.title = "fusion constants q=" + std::to_string(q);

    auto expected_sq = [&](int x, int y, int z) -> Rational {
        int c[3] = {0, 0, 0};
        ++c[x];
        ++c[y];
        ++c[z];
        if (c[0] > 0) {
            // One index is the unit: delta on the other two.
            if (c[0] == 3 || c[1] == 2 || c[2] == 2) return Rational(1);
            return Rational(0);
        }
        if (c[1] == 3) {
            int64_t n = (q - 3) * (q - 4);
            return Rational(n * n, 2 * (q - 1) * (q - 2));
        }
        if (c[1] == 2) return Rational(2 * (q - 3) * (q - 3), q - 1);
        if (c[1] == 1) return Rational(2 * (q - 2), q - 1);
        return Rational(q - 1, 2);
    };

    const char* names[3] = {"I~", "C~", "F~"};
    bool symmetric = true, squares = true, nonneg = true, binary = true;
    std::string sym_w, sq_w, neg_w, bin_w;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (int z = 0; z < 3; ++z) {
                std::string cell = std::string("N(") + names[x] + "," + names[y] + "," +
                                   names[z] + ")";
                double v = f.value[x][y][z];
                const double perms[5] = {f.value[x][z][y], f.value[y][x][z],
                                         f.value[y][z][x], f.value[z][x][y],
                                         f.value[z][y][x]};
                for (double w : perms)
                    if (std::abs(w - v) > 1e-12 * std::max(1.0, std::abs(v)) && symmetric) {
                        symmetric = false;
                        sym_w = cell + " breaks permutation symmetry";
                    }
                if (f.square[x][y][z] != expected_sq(x, y, z) && squares) {
                    squares = false;
                    sq_w = cell + "^2 = " + f.square[x][y][z].str() + ", want " +
                           expected_sq(x, y, z).str();
                }
                if (v < -1e-12 && nonneg) {
                    nonneg = false;
                    neg_w = cell + " = " + std::to_string(v);
                }
                if (q == 3 && f.square[x][y][z] != Rational(0) &&
                    f.square[x][y][z] != Rational(1) && binary) {
                    binary = false;
                    bin_w = cell + "^2 = " + f.square[x][y][z].str();
                }
            }
    rep.add("tensor symmetric under index permutations", symmetric, sym_w);
    rep.add("squared constants match the closed forms", squares, sq_w);
    rep.add("all constants nonnegative", nonneg, neg_w);
    if (q == 3) rep.add("q=3 constants lie in {0,1}", binary, bin_w);
    return rep;
}

}  // namespace scring
