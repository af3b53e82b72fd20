#include "scring/scring.hpp"

#include <algorithm>
#include <string>

#include "scring/checked.hpp"
#include "scring/errors.hpp"

namespace scring {

namespace {

using Row = std::array<QPoly, kNumSupports>;

// q - c
QPoly lin(int64_t c) { return QPoly{-c, 1}; }

std::string product_name(int x, int y) {
    return std::string(kSupportNames[x]) + "*" + kSupportNames[y];
}

std::string entry_name(int x, int y, int out) {
    return product_name(x, y) + " -> " + kSupportNames[out];
}

void require_ring_q(int64_t q) {
    if (q <= 2)
        throw UnsupportedField("support-class ring needs q > 2, got " + std::to_string(q));
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

}  // namespace

StructureTable::StructureTable() {
    const QPoly p1 = lin(1);
    const QPoly p1p1 = p1 * p1;
    const QPoly p1p2 = p1 * lin(2);
    const QPoly p1p3 = p1 * lin(3);
    const QPoly p1p1p2 = p1p1 * lin(2);
    const QPoly p1p2p3 = p1p2 * lin(3);
    const QPoly p1p3p4 = p1p3 * lin(4);

    constexpr SupportClass A = SupportClass::A;
    constexpr SupportClass B = SupportClass::B;
    constexpr SupportClass C = SupportClass::C;
    constexpr SupportClass Dp = SupportClass::Dp;
    constexpr SupportClass Dm = SupportClass::Dm;
    constexpr SupportClass Ep = SupportClass::Ep;
    constexpr SupportClass Em = SupportClass::Em;
    constexpr std::array<SupportClass, kNumSupports> all{A, B, C, Dp, Dm, Ep, Em};

    bool done[kNumSupports][kNumSupports] = {};
    auto put = [&](SupportClass x, SupportClass y, const Row& row) {
        if (done[idx(x)][idx(y)]) throw Error("duplicate structure rule " + product_name(idx(x), idx(y)));
        done[idx(x)][idx(y)] = true;
        for (int o = 0; o < kNumSupports; ++o) e_[idx(x)][idx(y)][o] = row[o];
    };
    auto single = [](SupportClass out, const QPoly& c) {
        Row row{};
        row[idx(out)] = c;
        return row;
    };

    // The diagonal class is central and acts as q-1 times the identity.
    for (SupportClass x : all) {
        put(A, x, single(x, p1));
        if (x != A) put(x, A, single(x, p1));
    }

    // Antidiagonal: an involution up to scale; swaps the one-zero classes in
    // pairs (zero at c <-> zero at a, zero at b <-> zero at d).
    put(B, B, single(A, p1));
    put(B, C, single(C, p1));
    put(C, B, single(C, p1));
    put(B, Dp, single(Em, p1));
    put(Dm, B, single(Em, p1));
    put(B, Dm, single(Ep, p1));
    put(Dp, B, single(Ep, p1));
    put(B, Ep, single(Dm, p1));
    put(Em, B, single(Dm, p1));
    put(B, Em, single(Dp, p1));
    put(Ep, B, single(Dp, p1));

    // Dense times dense spreads over everything.
    {
        Row row{};
        row[idx(A)] = p1p1p2;
        row[idx(B)] = p1p1p2;
        row[idx(C)] = p1p3p4;
        row[idx(Dp)] = p1p2p3;
        row[idx(Dm)] = p1p2p3;
        row[idx(Ep)] = p1p2p3;
        row[idx(Em)] = p1p2p3;
        put(C, C, row);
    }

    // Dense times a one-zero class: the two surviving one-zero outputs depend
    // on the side and on which class multiplies.
    auto dense_row = [&](SupportClass o1, SupportClass o2) {
        Row row{};
        row[idx(C)] = p1p3;
        row[idx(o1)] = p1p2;
        row[idx(o2)] = p1p2;
        return row;
    };
    put(C, Dp, dense_row(Dm, Ep));
    put(C, Em, dense_row(Dm, Ep));
    put(C, Dm, dense_row(Dp, Em));
    put(C, Ep, dense_row(Dp, Em));
    put(Dp, C, dense_row(Dm, Em));
    put(Ep, C, dense_row(Dm, Em));
    put(Dm, C, dense_row(Dp, Ep));
    put(Em, C, dense_row(Dp, Ep));

    // Products of two one-zero classes: either triangular-like (lands on a
    // central class plus itself) or it opens up into the dense class.
    auto tri_row = [&](SupportClass central, SupportClass self) {
        Row row{};
        row[idx(central)] = p1p1;
        row[idx(self)] = p1p2;
        return row;
    };
    auto open_row = [&](SupportClass other) {
        Row row{};
        row[idx(C)] = p1;
        row[idx(other)] = p1;
        return row;
    };
    put(Dp, Dp, tri_row(A, Dp));
    put(Ep, Em, tri_row(A, Dp));
    put(Dm, Dm, tri_row(A, Dm));
    put(Em, Ep, tri_row(A, Dm));
    put(Dp, Ep, tri_row(B, Ep));
    put(Ep, Dm, tri_row(B, Ep));
    put(Em, Dp, tri_row(B, Em));
    put(Dm, Em, tri_row(B, Em));
    put(Dp, Dm, open_row(Em));
    put(Ep, Ep, open_row(Em));
    put(Dm, Dp, open_row(Ep));
    put(Em, Em, open_row(Ep));
    put(Ep, Dp, open_row(Dm));
    put(Dp, Em, open_row(Dm));
    put(Dm, Ep, open_row(Dp));
    put(Em, Dm, open_row(Dp));

    for (int x = 0; x < kNumSupports; ++x)
        for (int y = 0; y < kNumSupports; ++y)
            if (!done[x][y]) throw Error("missing structure rule " + product_name(x, y));
}

void StructureTable::perturb(int x, int y, int out, int64_t delta) {
    e_[x][y][out] = e_[x][y][out] + QPoly::constant(delta);
}

bool StructureTable::operator==(const StructureTable& o) const {
    for (int x = 0; x < kNumSupports; ++x)
        for (int y = 0; y < kNumSupports; ++y)
            for (int out = 0; out < kNumSupports; ++out)
                if (e_[x][y][out] != o.e_[x][y][out]) return false;
    return true;
}

const StructureTable& structure_table() {
    static const StructureTable t;
    return t;
}

std::string str(const RVec7& v) {
    std::string s = "(";
    for (int i = 0; i < kNumSupports; ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

IVec7 sc_mul(const StructureTable& t, const IVec7& u, const IVec7& v, int64_t q) {
    require_ring_q(q);
    IVec7 r{};
    for (int x = 0; x < kNumSupports; ++x) {
        if (u[x] == 0) continue;
        for (int y = 0; y < kNumSupports; ++y) {
            if (v[y] == 0) continue;
            int64_t uv = ck_mul(u[x], v[y]);
            for (int out = 0; out < kNumSupports; ++out) {
                const QPoly& p = t.entry(x, y, out);
                if (p.is_zero()) continue;
                r[out] = ck_add(r[out], ck_mul(uv, p.eval(q)));
            }
        }
    }
    return r;
}

RVec7 sc_mul(const StructureTable& t, const RVec7& u, const RVec7& v, int64_t q) {
    require_ring_q(q);
    RVec7 r{};
    for (int x = 0; x < kNumSupports; ++x) {
        if (u[x].is_zero()) continue;
        for (int y = 0; y < kNumSupports; ++y) {
            if (v[y].is_zero()) continue;
            Rational uv = u[x] * v[y];
            for (int out = 0; out < kNumSupports; ++out) {
                const QPoly& p = t.entry(x, y, out);
                if (p.is_zero()) continue;
                r[out] += uv * Rational(p.eval(q));
            }
        }
    }
    return r;
}

IVec7 sc_mul_mod(const StructureTable& t, const IVec7& u, const IVec7& v, int64_t q,
                 int64_t r) {
    require_ring_q(q);
    if (r < 2) throw InvalidSpec("modulus must be at least 2, got " + std::to_string(r));
    IVec7 acc{};
    for (int x = 0; x < kNumSupports; ++x) {
        int64_t ux = norm_mod(u[x], r);
        if (ux == 0) continue;
        for (int y = 0; y < kNumSupports; ++y) {
            int64_t vy = norm_mod(v[y], r);
            if (vy == 0) continue;
            int64_t uv = mulmod(ux, vy, r);
            for (int out = 0; out < kNumSupports; ++out) {
                const QPoly& p = t.entry(x, y, out);
                if (p.is_zero()) continue;
                int64_t c = norm_mod(p.eval(q), r);
                acc[out] = (acc[out] + mulmod(uv, c, r)) % r;
            }
        }
    }
    return acc;
}

Mat7 left_mult_matrix(const StructureTable& t, SupportClass x, int64_t q) {
    require_ring_q(q);
    Mat7 m{};
    for (int j = 0; j < kNumSupports; ++j)
        for (int out = 0; out < kNumSupports; ++out)
            m[out][j] = t.entry(idx(x), j, out).eval(q);
    return m;
}

RVec7 identity_vec(int64_t q) {
    require_ring_q(q);
    RVec7 v{};
    v[idx(SupportClass::A)] = Rational(1, q - 1);
    return v;
}

namespace {

struct QuadFit {
    Rational c0, c1, c2;
};

// Unique polynomial of degree <= 2 through three points with distinct
// abscissae, by Lagrange expansion.
QuadFit fit_quadratic(const std::array<int64_t, 3>& xs, const std::array<int64_t, 3>& ys) {
    QuadFit f;
    for (int i = 0; i < 3; ++i) {
        int j = (i + 1) % 3;
        int k = (i + 2) % 3;
        Rational w = Rational(ys[i], ck_mul(xs[i] - xs[j], xs[i] - xs[k]));
        f.c2 += w;
        f.c1 += w * Rational(-(xs[j] + xs[k]));
        f.c0 += w * Rational(ck_mul(xs[j], xs[k]));
    }
    return f;
}

}  // namespace

StructureTable interpolate_constants(const std::vector<int64_t>& sample_qs) {
    std::vector<int64_t> qs;
    for (int64_t q : sample_qs) {
        require_ring_q(q);
        if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
    }
    if (qs.size() < 3)
        throw UnderdeterminedFit("constants are quadratic after removing the common q-1 "
                                 "factor; need 3 distinct samples, got " +
                                 std::to_string(qs.size()));

    std::vector<SupportProducts> samples;
    samples.reserve(qs.size());
    for (int64_t q : qs) {
        Field f(q);
        GroupTable g(f, GroupKind::SL2);
        samples.push_back(support_product_table(g));
    }

    const StructureTable& want = structure_table();
    const QPoly q_minus_1 = lin(1);
    for (int x = 0; x < kNumSupports; ++x) {
        for (int y = 0; y < kNumSupports; ++y) {
            for (size_t i = 0; i < qs.size(); ++i)
                if (!samples[i][x][y].ok)
                    throw Error("brute product " + product_name(x, y) +
                                " not closed over support classes at q=" +
                                std::to_string(qs[i]));
            for (int out = 0; out < kNumSupports; ++out) {
                std::vector<int64_t> vals(qs.size());
                for (size_t i = 0; i < qs.size(); ++i) {
                    int64_t v = samples[i][x][y].coeffs[out];
                    int64_t d = qs[i] - 1;
                    if (v % d != 0)
                        throw NonIntegerFit("sampled " + entry_name(x, y, out) + " = " +
                                            std::to_string(v) + " at q=" +
                                            std::to_string(qs[i]) +
                                            " is not divisible by q-1");
                    vals[i] = v / d;
                }
                QuadFit fit = fit_quadratic({qs[0], qs[1], qs[2]}, {vals[0], vals[1], vals[2]});
                if (!fit.c0.is_integer() || !fit.c1.is_integer() || !fit.c2.is_integer())
                    throw NonIntegerFit("fit for " + entry_name(x, y, out) +
                                        " has non-integer coefficients " + fit.c0.str() +
                                        ", " + fit.c1.str() + ", " + fit.c2.str());
                QPoly quot{fit.c0.as_integer(), fit.c1.as_integer(), fit.c2.as_integer()};
                for (size_t i = 3; i < qs.size(); ++i)
                    if (quot.eval(qs[i]) != vals[i])
                        throw InterpolationMismatch(
                            "fit " + quot.str() + " for " + entry_name(x, y, out) +
                            " misses sample q=" + std::to_string(qs[i]));
                QPoly entry = quot * q_minus_1;
                if (entry != want.entry(x, y, out))
                    throw InterpolationMismatch("reconstructed " + entry_name(x, y, out) +
                                                " = " + entry.str() + " but the table has " +
                                                want.entry(x, y, out).str());
            }
        }
    }
    return want;
}

Report scaled_variant_check(int64_t q, GroupKind variant, int64_t det_order) {
    require_ring_q(q);
    // brute constants = (num/den) * closed SL2 constants
    int64_t num = 1;
    int64_t den = 1;
    std::string label;
    switch (variant) {
        case GroupKind::SL2:
            label = "SL2";
            break;
        case GroupKind::PSL2:
            if (q % 2 == 0)
                throw EvenCharacteristic("projective halving needs odd q, got " +
                                         std::to_string(q));
            den = 2;
            label = "PSL2";
            break;
        case GroupKind::GL2:
            num = q - 1;
            label = "GL2";
            break;
        case GroupKind::DetSubgroup:
            num = det_order;
            label = "det-subgroup(m=" + std::to_string(det_order) + ")";
            break;
    }

    Field f(q);
    GroupTable g(f, variant, det_order);
    SupportProducts brute = support_product_table(g);
    const StructureTable& tab = structure_table();

    Report rep;
    rep.title = label + " q=" + std::to_string(q);
    for (int x = 0; x < kNumSupports; ++x) {
        for (int y = 0; y < kNumSupports; ++y) {
            std::string pname = product_name(x, y);
            if (!brute[x][y].ok) {
                rep.add(pname, false,
                        "product is not constant on support classes (elements " +
                            std::to_string(brute[x][y].witness_a) + ", " +
                            std::to_string(brute[x][y].witness_b) + ")");
                continue;
            }
            bool all_ok = true;
            std::string witness;
            for (int out = 0; out < kNumSupports && all_ok; ++out) {
                int64_t scaled_closed = ck_mul(tab.entry(x, y, out).eval(q), num);
                int64_t scaled_brute = ck_mul(brute[x][y].coeffs[out], den);
                if (scaled_brute != scaled_closed) {
                    all_ok = false;
                    witness = "coeff of " + std::string(kSupportNames[out]) + ": brute " +
                              std::to_string(brute[x][y].coeffs[out]) + ", expected " +
                              std::to_string(scaled_closed) + "/" + std::to_string(den);
                }
            }
            rep.add(pname, all_ok, witness);
        }
    }
    return rep;
}

}  // namespace scring
