#include "scring/chars.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "scring/checked.hpp"
#include "scring/errors.hpp"
#include "scring/idempotents.hpp"
#include "scring/scring.hpp"

namespace scring {

namespace {

constexpr double kTau = 6.28318530717958647692;

std::complex<double> root_of_unity(int64_t k, int64_t n) {
    k %= n;
    if (k < 0) k += n;
    return std::polar(1.0, kTau * static_cast<double>(k) / static_cast<double>(n));
}

int64_t checked_char_q(int64_t q) {
    if (q < 3)
        throw UnsupportedField("character tables need q >= 3, got q=" + std::to_string(q));
    return q;
}

std::string cx_str(std::complex<double> z) {
    return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

// Closed per-type totals of F*X, full row before dropping absent types.
std::map<RefinedType, int64_t> fx_row(int64_t q, SupportClass s) {
    const int64_t q1 = q - 1;
    using R = RefinedType;
    if (q % 2 == 1) {
        switch (s) {
            case SupportClass::A:
                return {{R::Central, 1}, {R::Unipotent, 0}, {R::SplitOpposite, 2},
                        {R::SplitGeneric, 2}, {R::IrreducibleTraceZero, 0},
                        {R::IrreducibleTraceNonzero, 0}};
            case SupportClass::B:
                return {{R::Central, 0}, {R::Unipotent, 0}, {R::SplitOpposite, q1},
                        {R::SplitGeneric, 0}, {R::IrreducibleTraceZero, q1},
                        {R::IrreducibleTraceNonzero, 0}};
            case SupportClass::C:
                return {{R::Central, 0}, {R::Unipotent, q1 * (q - 3)},
                        {R::SplitOpposite, q1 * (q - 3)}, {R::SplitGeneric, q1 * (q - 4)},
                        {R::IrreducibleTraceZero, q1 * q1},
                        {R::IrreducibleTraceNonzero, q1 * (q - 2)}};
            case SupportClass::Dp:
            case SupportClass::Dm:
                return {{R::Central, 0}, {R::Unipotent, q1}, {R::SplitOpposite, 2 * q1},
                        {R::SplitGeneric, 2 * q1}, {R::IrreducibleTraceZero, 0},
                        {R::IrreducibleTraceNonzero, 0}};
            default:
                return {{R::Central, 0}, {R::Unipotent, q1}, {R::SplitOpposite, 0},
                        {R::SplitGeneric, q1}, {R::IrreducibleTraceZero, 0},
                        {R::IrreducibleTraceNonzero, q1}};
        }
    }
    switch (s) {
        case SupportClass::A:
            return {{R::Central, 1}, {R::Unipotent, 0}, {R::SplitGeneric, 2},
                    {R::IrreducibleTraceNonzero, 0}};
        case SupportClass::B:
            return {{R::Central, 0}, {R::Unipotent, q1}, {R::SplitGeneric, 0},
                    {R::IrreducibleTraceNonzero, 0}};
        case SupportClass::C:
            return {{R::Central, 0}, {R::Unipotent, q1 * (q - 2)},
                    {R::SplitGeneric, q1 * (q - 4)}, {R::IrreducibleTraceNonzero, q1 * (q - 2)}};
        case SupportClass::Dp:
        case SupportClass::Dm:
            return {{R::Central, 0}, {R::Unipotent, q1}, {R::SplitGeneric, 2 * q1},
                    {R::IrreducibleTraceNonzero, 0}};
        default:
            return {{R::Central, 0}, {R::Unipotent, 0}, {R::SplitGeneric, q1},
                    {R::IrreducibleTraceNonzero, q1}};
    }
}

// Directly tabulated per-type totals of pi~_i, odd q.
std::map<RefinedType, Rational> pi_tilde_row(int64_t q, int i) {
    const int64_t q1 = q - 1;
    using R = RefinedType;
    switch (i) {
        case 1:
            return {{R::Central, Rational(1, q1 * q1 * q * (q + 1))},
                    {R::Unipotent, Rational(1, q * q1)},
                    {R::SplitOpposite, Rational(1, q1 * q1)},
                    {R::SplitGeneric, Rational(1, q1 * q1)},
                    {R::IrreducibleTraceZero, Rational(1, q * q - 1)},
                    {R::IrreducibleTraceNonzero, Rational(1, q * q - 1)}};
        case 2:
            return {{R::Central, Rational(q - 2, 2 * q * q1 * q1)},
                    {R::Unipotent, Rational(-1, q * q1)},
                    {R::SplitOpposite, Rational(q - 3, 2 * q1 * q1)},
                    {R::SplitGeneric, Rational(-1, q1 * q1)},
                    {R::IrreducibleTraceZero, Rational(1, 2 * q1)},
                    {R::IrreducibleTraceNonzero, Rational(0)}};
        case 3:
            return {{R::Central, Rational(1, 2 * (q * q - 1))},
                    {R::Unipotent, Rational(0)},
                    {R::SplitOpposite, Rational(-1, 2 * q1)},
                    {R::SplitGeneric, Rational(0)},
                    {R::IrreducibleTraceZero, Rational(-1, 2 * (q + 1))},
                    {R::IrreducibleTraceNonzero, Rational(1, q * q - 1)}};
        default:
            return {{R::Central, Rational(2, q1 * q1 * (q + 1))},
                    {R::Unipotent, Rational(0)},
                    {R::SplitOpposite, Rational(2, q1 * q1)},
                    {R::SplitGeneric, Rational(2, q1 * q1)},
                    {R::IrreducibleTraceZero, Rational(-2, q * q - 1)},
                    {R::IrreducibleTraceNonzero, Rational(-2, q * q - 1)}};
    }
}

template <typename V>
std::string profile_str(const std::map<RefinedType, V>& m, bool odd) {
    std::string s = "{";
    bool first = true;
    for (const auto& [k, v] : m) {
        if (!first) s += ", ";
        first = false;
        s += std::string(refined_label(k, odd)) + ": ";
        if constexpr (std::is_same_v<V, Rational>)
            s += v.str();
        else
            s += std::to_string(v);
    }
    return s + "}";
}

const char* family_letter(IrrepFamily f) {
    switch (f) {
        case IrrepFamily::U: return "U";
        case IrrepFamily::V: return "V";
        case IrrepFamily::W: return "W";
        case IrrepFamily::X: return "X";
    }
    throw UnreachablePattern("unhandled irrep family");
}

}  // namespace

int64_t IrrepSpec::dim(int64_t q) const {
    switch (family) {
        case IrrepFamily::U: return 1;
        case IrrepFamily::V: return q;
        case IrrepFamily::W: return q + 1;
        case IrrepFamily::X: return q - 1;
    }
    throw UnreachablePattern("unhandled irrep family");
}

std::string IrrepSpec::name() const {
    std::string s = std::string(family_letter(family)) + "(" + std::to_string(e1);
    if (family == IrrepFamily::W) s += "," + std::to_string(e2);
    return s + ")";
}

CharTable::CharTable(int64_t q)
    : q_(checked_char_q(q)), g_(Field(q), GroupKind::GL2), cc_(g_) {
    const int64_t n1 = q - 1;
    const int64_t n2 = q * q - 1;
    for (int64_t e = 0; e < n1; ++e) irreps_.push_back({IrrepFamily::U, e, 0});
    for (int64_t e = 0; e < n1; ++e) irreps_.push_back({IrrepFamily::V, e, 0});
    for (int64_t e1 = 0; e1 < n1; ++e1)
        for (int64_t e2 = e1 + 1; e2 < n1; ++e2) irreps_.push_back({IrrepFamily::W, e1, e2});
    for (int64_t e = 1; e < n2; ++e) {
        if (e % (q + 1) == 0) continue;
        if (e * q % n2 < e) continue;  // one exponent per Frobenius pair
        irreps_.push_back({IrrepFamily::X, e, 0});
    }
}

void CharTable::validate(const IrrepSpec& s) const {
    const int64_t n1 = q_ - 1;
    const int64_t n2 = q_ * q_ - 1;
    switch (s.family) {
        case IrrepFamily::U:
        case IrrepFamily::V:
            if (s.e1 < 0 || s.e1 >= n1 || s.e2 != 0)
                throw InvalidSpec("exponent out of range in " + s.name());
            return;
        case IrrepFamily::W:
            if (s.e1 < 0 || s.e1 >= n1 || s.e2 < 0 || s.e2 >= n1)
                throw InvalidSpec("exponent out of range in " + s.name());
            if (s.e1 == s.e2) throw InvalidSpec("equal characters in " + s.name());
            return;
        case IrrepFamily::X:
            if (s.e1 < 0 || s.e1 >= n2 || s.e2 != 0)
                throw InvalidSpec("exponent out of range in " + s.name());
            if (s.e1 % (q_ + 1) == 0)
                throw InvalidSpec(s.name() + " has trivial (q-1)-st power");
            return;
    }
    throw UnreachablePattern("unhandled irrep family");
}

bool CharTable::isomorphic(const IrrepSpec& a, const IrrepSpec& b) const {
    validate(a);
    validate(b);
    if (a.family != b.family) return false;
    switch (a.family) {
        case IrrepFamily::U:
        case IrrepFamily::V: return a.e1 == b.e1;
        case IrrepFamily::W:
            return (a.e1 == b.e1 && a.e2 == b.e2) || (a.e1 == b.e2 && a.e2 == b.e1);
        case IrrepFamily::X:
            return b.e1 == a.e1 || b.e1 == a.e1 * q_ % (q_ * q_ - 1);
    }
    throw UnreachablePattern("unhandled irrep family");
}

std::complex<double> CharTable::value(const IrrepSpec& s, int64_t cls) const {
    validate(s);
    const ConjClassInfo& info = cc_.info(cls);
    const Field& f = g_.field();
    const ExtField& ex = cc_.ext();
    const int64_t n1 = q_ - 1;
    const int64_t n2 = q_ * q_ - 1;
    auto base = [&](int64_t e, int64_t x) { return root_of_unity(e * f.dlog(x), n1); };
    auto ext = [&](int64_t e, int64_t x) { return root_of_unity(e * ex.dlog(x), n2); };

    switch (info.family) {
        case ClassFamily::Central: {
            const int64_t x = info.u;
            switch (s.family) {
                case IrrepFamily::U: return base(s.e1, f.mul(x, x));
                case IrrepFamily::V: return static_cast<double>(q_) * base(s.e1, f.mul(x, x));
                case IrrepFamily::W:
                    return static_cast<double>(q_ + 1) * base(s.e1 + s.e2, x);
                case IrrepFamily::X:
                    return static_cast<double>(q_ - 1) * ext(s.e1, ex.embed(x));
            }
            break;
        }
        case ClassFamily::Unipotent: {
            const int64_t x = info.u;
            switch (s.family) {
                case IrrepFamily::U: return base(s.e1, f.mul(x, x));
                case IrrepFamily::V: return 0.0;
                case IrrepFamily::W: return base(s.e1 + s.e2, x);
                case IrrepFamily::X: return -ext(s.e1, ex.embed(x));
            }
            break;
        }
        case ClassFamily::Split: {
            const int64_t x = info.u;
            const int64_t y = info.v;
            switch (s.family) {
                case IrrepFamily::U: return base(s.e1, f.mul(x, y));
                case IrrepFamily::V: return base(s.e1, f.mul(x, y));
                case IrrepFamily::W:
                    return root_of_unity(s.e1 * f.dlog(x) + s.e2 * f.dlog(y), n1) +
                           root_of_unity(s.e1 * f.dlog(y) + s.e2 * f.dlog(x), n1);
                case IrrepFamily::X: return 0.0;
            }
            break;
        }
        case ClassFamily::Irreducible: {
            const int64_t xi = info.u;
            switch (s.family) {
                case IrrepFamily::U: return base(s.e1, ex.norm(xi));
                case IrrepFamily::V: return -base(s.e1, ex.norm(xi));
                case IrrepFamily::W: return 0.0;
                case IrrepFamily::X: return -(ext(s.e1, xi) + ext(s.e1, ex.frobenius(xi)));
            }
            break;
        }
    }
    throw UnreachablePattern("unhandled class or irrep family");
}

int64_t CharTable::legendre_exponent() const {
    if (q_ % 2 == 0)
        throw EvenCharacteristic("the quadratic residue character needs odd q");
    return (q_ - 1) / 2;
}

std::vector<IrrepSpec> CharTable::relevant_w() const {
    std::vector<IrrepSpec> out;
    for (int64_t e = 1; e < q_ - 1; ++e) {
        const int64_t partner = q_ - 1 - e;
        if (partner == e) continue;  // the real quadratic character
        if (e > partner) continue;
        out.push_back({IrrepFamily::W, e, partner});
    }
    return out;
}

std::vector<IrrepSpec> CharTable::relevant_x() const {
    std::vector<IrrepSpec> out;
    const int64_t n2 = q_ * q_ - 1;
    for (int64_t j = 1; j <= q_; ++j) {
        const int64_t e = (q_ - 1) * j;
        if (e % (q_ + 1) == 0) continue;
        if (e * q_ % n2 < e) continue;
        out.push_back({IrrepFamily::X, e, 0});
    }
    return out;
}

int CharTable::sigma_of(const IrrepSpec& s) const {
    validate(s);
    if (s.family != IrrepFamily::X)
        throw InvalidSpec("sigma is defined for X specs, not " + s.name());
    if (s.e1 % (q_ - 1) != 0)
        throw InvalidSpec(s.name() + " is not trivial on the base units");
    if (q_ % 2 == 0) throw EvenCharacteristic("no trace-zero units outside F_q for even q");
    const ExtField& ex = cc_.ext();
    int64_t xi0 = -1;
    for (int64_t x = q_; x < ex.size(); ++x)
        if (ex.trace(x) == 0) {
            xi0 = x;
            break;
        }
    if (xi0 < 0) throw UnreachablePattern("no trace-zero unit found");
    std::complex<double> v = root_of_unity(s.e1 * ex.dlog(xi0), q_ * q_ - 1);
    if (std::abs(v.imag()) > 1e-9 || std::abs(std::abs(v.real()) - 1.0) > 1e-9)
        throw NotNearInteger("sigma of " + s.name() + " is " + cx_str(v));
    return v.real() > 0 ? 1 : -1;
}

int CharTable::alpha_minus_one(const IrrepSpec& s) const {
    validate(s);
    if (s.family != IrrepFamily::W)
        throw InvalidSpec("alpha(-1) bookkeeping applies to W specs, not " + s.name());
    if (q_ % 2 == 0) throw EvenCharacteristic("alpha(-1) is always 1 for even q");
    const Field& f = g_.field();
    const int64_t d = f.dlog(f.neg(1));
    return (s.e1 * d) % (q_ - 1) == 0 ? 1 : -1;
}

namespace {

// Per-conjugacy-class coefficient totals of an integer vector.
std::vector<int64_t> class_totals(const CharTable& t, const GroupVec& e) {
    if (&e.group() != &t.group())
        throw GroupMismatch("profile of a vector over a different group table");
    const ConjClasses& cc = t.classes();
    std::vector<int64_t> tot(cc.num_classes(), 0);
    for (int64_t g = 0; g < e.size(); ++g)
        if (e[g] != 0) tot[cc.class_of(g)] = ck_add(tot[cc.class_of(g)], e[g]);
    return tot;
}

}  // namespace

std::map<RefinedType, int64_t> class_profile_sum(const CharTable& t, const GroupVec& e) {
    const ConjClasses& cc = t.classes();
    const bool odd = t.q() % 2 == 1;
    std::vector<int64_t> tot = class_totals(t, e);
    std::map<RefinedType, int64_t> out;
    std::map<RefinedType, int64_t> first;
    for (int64_t c = 0; c < cc.num_classes(); ++c) {
        const RefinedType rt = cc.info(c).refined;
        auto it = out.find(rt);
        if (it == out.end()) {
            out[rt] = tot[c];
            first[rt] = c;
        } else if (it->second != tot[c]) {
            throw NotTypeConstant(std::string("classes ") + std::to_string(first[rt]) + " and " +
                                  std::to_string(c) + " of type " + refined_label(rt, odd) +
                                  " have totals " + std::to_string(it->second) + " and " +
                                  std::to_string(tot[c]));
        }
    }
    return out;
}

std::map<RefinedType, Rational> class_profile_pointwise(const CharTable& t, const ScaledVec& e) {
    const ConjClasses& cc = t.classes();
    const bool odd = t.q() % 2 == 1;
    std::vector<int64_t> tot = class_totals(t, e.vec);
    std::map<RefinedType, Rational> out;
    std::map<RefinedType, int64_t> first;
    std::map<RefinedType, int64_t> raw;
    for (int64_t c = 0; c < cc.num_classes(); ++c) {
        const RefinedType rt = cc.info(c).refined;
        auto it = raw.find(rt);
        if (it == raw.end()) {
            raw[rt] = tot[c];
            first[rt] = c;
            out[rt] = e.scale * Rational(tot[c]);
        } else if (it->second != tot[c]) {
            throw NotPointwiseConstant(
                std::string("classes with representatives ") +
                std::to_string(cc.info(first[rt]).rep) + " and " + std::to_string(cc.info(c).rep) +
                " of type " + refined_label(rt, odd) + " have totals " +
                (e.scale * Rational(it->second)).str() + " and " +
                (e.scale * Rational(tot[c])).str());
        }
    }
    return out;
}

ScaledVec pi_tilde(const CharTable& t, int i) {
    const int64_t q = t.q();
    RVec7 p = pi(i, q);
    int64_t den = 1;
    for (const auto& r : p) den = std::lcm(den, r.den());
    GroupVec combo(t.group());
    for (int s = 0; s < kNumSupports; ++s) {
        if (p[s].is_zero()) continue;
        combo += embedded_class_sum(t.group(), static_cast<SupportClass>(s)) *
                 (p[s].num() * (den / p[s].den()));
    }
    GroupVec vec = convolve(combo, diagonal_f(t.group()));
    return ScaledVec{std::move(vec), Rational(1, ck_mul(den, q - 1))};
}

int64_t rank_in_irrep(const CharTable& t, const ScaledVec& e, const IrrepSpec& spec) {
    t.validate(spec);
    const ConjClasses& cc = t.classes();
    std::vector<int64_t> tot = class_totals(t, e.vec);
    std::complex<double> acc = 0.0;
    for (int64_t c = 0; c < cc.num_classes(); ++c)
        if (tot[c] != 0) acc += static_cast<double>(tot[c]) * t.value(spec, c);
    acc *= e.scale.to_double();
    const int64_t r = std::llround(acc.real());
    if (std::abs(acc.imag()) > 1e-6 || std::abs(acc.real() - static_cast<double>(r)) > 1e-6 ||
        r < 0)
        throw NotNearInteger("trace in " + spec.name() + " is " + cx_str(acc));
    return r;
}

Report character_orthogonality(int64_t q) {
    CharTable t(q);
    Report r;
    r.title = "character orthogonality q=" + std::to_string(q);
    const auto& irr = t.irreps();
    const ConjClasses& cc = t.classes();
    const int m = static_cast<int>(irr.size());
    const int64_t ncls = cc.num_classes();
    const double order = static_cast<double>(t.group().n());

    std::vector<std::vector<std::complex<double>>> val(m);
    for (int i = 0; i < m; ++i) {
        val[i].resize(ncls);
        for (int64_t c = 0; c < ncls; ++c) val[i][c] = t.value(irr[i], c);
    }
    auto inner = [&](const std::vector<std::complex<double>>& a,
                     const std::vector<std::complex<double>>& b) {
        std::complex<double> acc = 0.0;
        for (int64_t c = 0; c < ncls; ++c)
            acc += static_cast<double>(cc.info(c).size) * a[c] * std::conj(b[c]);
        return acc / order;
    };

    for (int i = 0; i < m; ++i) {
        bool ok = true;
        std::string w;
        for (int j = 0; j < m; ++j) {
            std::complex<double> ip = inner(val[i], val[j]);
            const double want = i == j ? 1.0 : 0.0;
            if (std::abs(ip - want) > 1e-9) {
                ok = false;
                w = "<" + irr[i].name() + "," + irr[j].name() + "> = " + cx_str(ip);
                break;
            }
        }
        r.add(irr[i].name() + " is orthonormal in the table", ok, w);
    }

    int64_t dimsq = 0;
    for (const auto& s : irr) dimsq += s.dim(q) * s.dim(q);
    r.add("sum of squared dimensions is |GL2|", dimsq == t.group().n(),
          std::to_string(dimsq) + " vs " + std::to_string(t.group().n()));

    {
        // The two parameterizations of one W are the same class function.
        IrrepSpec w1{IrrepFamily::W, 0, 1};
        IrrepSpec w2{IrrepFamily::W, 1, 0};
        std::vector<std::complex<double>> a(ncls), b(ncls);
        for (int64_t c = 0; c < ncls; ++c) {
            a[c] = t.value(w1, c);
            b[c] = t.value(w2, c);
        }
        std::complex<double> ip = inner(a, b);
        r.add("W(0,1) and W(1,0) are the same character", std::abs(ip - 1.0) <= 1e-9,
              cx_str(ip));
        IrrepSpec x1 = t.relevant_x().front();
        IrrepSpec x2{IrrepFamily::X, x1.e1 * q % (q * q - 1), 0};
        for (int64_t c = 0; c < ncls; ++c) {
            a[c] = t.value(x1, c);
            b[c] = t.value(x2, c);
        }
        ip = inner(a, b);
        r.add("an X exponent and its Frobenius partner give the same character",
              std::abs(ip - 1.0) <= 1e-9, cx_str(ip));
        for (int64_t c = 0; c < ncls; ++c) {
            a[c] = t.value({IrrepFamily::U, 0, 0}, c);
            b[c] = t.value({IrrepFamily::V, 0, 0}, c);
        }
        ip = inner(a, b);
        r.add("trivial U and trivial V are orthogonal", std::abs(ip) <= 1e-9, cx_str(ip));
    }
    return r;
}

Report fx_profile_check(int64_t q) {
    CharTable t(q);
    Report r;
    r.title = "FX profiles q=" + std::to_string(q);
    const bool odd = q % 2 == 1;
    const auto counts = t.classes().refined_class_counts();
    GroupVec F = diagonal_f(t.group());

    std::map<RefinedType, int64_t> margin;
    for (int si = 0; si < kNumSupports; ++si) {
        const SupportClass s = static_cast<SupportClass>(si);
        GroupVec fx = convolve(F, embedded_class_sum(t.group(), s));
        auto prof = class_profile_sum(t, fx);
        auto want = fx_row(q, s);
        for (auto it = want.begin(); it != want.end();)
            it = counts[idx(it->first)] == 0 ? want.erase(it) : std::next(it);
        r.add(std::string("profile of F*") + kSupportNames[si] + " matches the closed row",
              prof == want, profile_str(prof, odd) + " vs " + profile_str(want, odd));
        for (const auto& [k, v] : prof) margin[k] += v;
    }
    for (const auto& [k, v] : margin) {
        int64_t size = -1;
        for (int64_t c = 0; c < t.classes().num_classes(); ++c)
            if (t.classes().info(c).refined == k) {
                size = t.classes().info(c).size;
                break;
            }
        r.add(std::string("margin over ") + refined_label(k, odd) + " equals the class size",
              v == size, std::to_string(v) + " vs " + std::to_string(size));
    }
    return r;
}

Report pi_tilde_profile_check(int64_t q) {
    CharTable t(q);
    Report r;
    r.title = "pi~ profiles q=" + std::to_string(q);
    const bool odd = q % 2 == 1;
    const auto counts = t.classes().refined_class_counts();

    for (int i = 1; i <= 4; ++i) {
        ScaledVec pt = pi_tilde(t, i);
        auto prof = class_profile_pointwise(t, pt);

        // Independent expectation: combine the closed FX rows with the pi
        // coefficients instead of convolving anything.
        RVec7 p = pi(i, q);
        std::map<RefinedType, Rational> want;
        for (const auto& [k, v] : prof) {
            (void)v;
            Rational acc(0);
            for (int si = 0; si < kNumSupports; ++si)
                acc += p[si] * Rational(fx_row(q, static_cast<SupportClass>(si)).at(k));
            want[k] = acc * Rational(1, q - 1);
        }
        r.add("profile of pi~" + std::to_string(i) + " matches the FX combination", prof == want,
              profile_str(prof, odd) + " vs " + profile_str(want, odd));

        if (odd) {
            auto row = pi_tilde_row(q, i);
            for (auto it = row.begin(); it != row.end();)
                it = counts[idx(it->first)] == 0 ? row.erase(it) : std::next(it);
            r.add("profile of pi~" + std::to_string(i) + " matches the tabulated row",
                  prof == row, profile_str(prof, odd) + " vs " + profile_str(row, odd));
        }
    }
    return r;
}

Report decomposition_report(int64_t q) {
    CharTable t(q);
    Report r;
    r.title = "decomposition q=" + std::to_string(q);
    const bool odd = q % 2 == 1;
    const auto& irr = t.irreps();
    const int m = static_cast<int>(irr.size());

    std::vector<ScaledVec> pts;
    pts.reserve(4);
    for (int i = 1; i <= 4; ++i) pts.push_back(pi_tilde(t, i));

    std::vector<std::array<int64_t, 4>> rank(m);
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < 4; ++i) rank[j][i] = rank_in_irrep(t, pts[i], irr[j]);

    auto find_index = [&](const IrrepSpec& s) {
        for (int j = 0; j < m; ++j)
            if (t.isomorphic(irr[j], s)) return j;
        throw UnreachablePattern("spec " + s.name() + " missing from the enumeration");
    };

    std::vector<std::array<int64_t, 4>> pred(m, {0, 0, 0, 0});
    pred[find_index({IrrepFamily::U, 0, 0})][0] = 1;
    pred[find_index({IrrepFamily::V, 0, 0})][3] = 2;
    if (odd) {
        pred[find_index({IrrepFamily::V, t.legendre_exponent(), 0})][q % 4 == 1 ? 1 : 2] = 1;
        for (const auto& w : t.relevant_w())
            pred[find_index(w)][t.alpha_minus_one(w) == 1 ? 1 : 2] = 1;
        for (const auto& x : t.relevant_x())
            pred[find_index(x)][t.sigma_of(x) == 1 ? 2 : 1] = 1;
    } else {
        for (const auto& w : t.relevant_w()) pred[find_index(w)][1] = 1;
        for (const auto& x : t.relevant_x()) pred[find_index(x)][2] = 1;
    }

    for (int fam = 0; fam < 4; ++fam)
        for (int i = 0; i < 4; ++i) {
            bool ok = true;
            std::string w;
            for (int j = 0; j < m; ++j) {
                if (static_cast<int>(irr[j].family) != fam) continue;
                if (rank[j][i] != pred[j][i]) {
                    ok = false;
                    w = "rank of pi~" + std::to_string(i + 1) + " in " + irr[j].name() + " is " +
                        std::to_string(rank[j][i]) + ", placement demands " +
                        std::to_string(pred[j][i]);
                    break;
                }
            }
            r.add("pi~" + std::to_string(i + 1) + " placement across the " +
                      family_letter(static_cast<IrrepFamily>(fam)) + " family",
                  ok, w);
        }

    {
        int64_t total1 = 0;
        for (int j = 0; j < m; ++j) total1 += rank[j][0];
        r.add("pi~1 sits only in the trivial character",
              total1 == 1 && rank[find_index({IrrepFamily::U, 0, 0})][0] == 1,
              "total rank " + std::to_string(total1));
        int64_t total4 = 0;
        for (int j = 0; j < m; ++j) total4 += rank[j][3];
        r.add("pi~4 sits only in V(0), with rank 2",
              total4 == 2 && rank[find_index({IrrepFamily::V, 0, 0})][3] == 2,
              "total rank " + std::to_string(total4));
    }
    if (odd) {
        const int vl = find_index({IrrepFamily::V, t.legendre_exponent(), 0});
        if (q % 4 == 1)
            r.add("V twisted by the residue character lands in pi~2 (q = 1 mod 4)",
                  rank[vl][1] == 1 && rank[vl][2] == 0,
                  "ranks " + std::to_string(rank[vl][1]) + "," + std::to_string(rank[vl][2]));
        else
            r.add("V twisted by the residue character lands in pi~3 (q = 3 mod 4)",
                  rank[vl][2] == 1 && rank[vl][1] == 0,
                  "ranks " + std::to_string(rank[vl][1]) + "," + std::to_string(rank[vl][2]));

        int64_t wp = 0, wm = 0, xp = 0, xm = 0;
        for (const auto& w : t.relevant_w()) (t.alpha_minus_one(w) == 1 ? wp : wm) += 1;
        for (const auto& x : t.relevant_x()) (t.sigma_of(x) == 1 ? xp : xm) += 1;
        const int64_t ewp = q % 4 == 1 ? (q - 5) / 4 : (q - 3) / 4;
        const int64_t ewm = q % 4 == 1 ? (q - 1) / 4 : (q - 3) / 4;
        const int64_t exp_ = q % 4 == 1 ? (q - 1) / 4 : (q - 3) / 4;
        const int64_t exm = q % 4 == 1 ? (q - 1) / 4 : (q + 1) / 4;
        r.add("count of W pairs with alpha(-1)=1", wp == ewp,
              std::to_string(wp) + " vs " + std::to_string(ewp));
        r.add("count of W pairs with alpha(-1)=-1", wm == ewm,
              std::to_string(wm) + " vs " + std::to_string(ewm));
        r.add("count of scalar-trivial X with sigma=1", xp == exp_,
              std::to_string(xp) + " vs " + std::to_string(exp_));
        r.add("count of scalar-trivial X with sigma=-1", xm == exm,
              std::to_string(xm) + " vs " + std::to_string(exm));
    } else {
        r.add("count of W pairs with conjugate parameters",
              static_cast<int64_t>(t.relevant_w().size()) == (q - 2) / 2,
              std::to_string(t.relevant_w().size()));
        r.add("count of scalar-trivial X",
              static_cast<int64_t>(t.relevant_x().size()) == q / 2,
              std::to_string(t.relevant_x().size()));
        bool ok = true;
        for (const auto& x : t.relevant_x())
            if (rank[find_index(x)][2] != 1) ok = false;
        r.add("interpretation: pi~3 fills the scalar-trivial degree q-1 characters", ok, "");
    }

    // Family totals of the full projector sum, then per-projector traces.
    const std::array<int64_t, 4> fam_want =
        odd ? std::array<int64_t, 4>{1, 3 * q, (q + 1) * (q - 3) / 2, (q - 1) * (q - 1) / 2}
            : std::array<int64_t, 4>{1, 2 * q, (q + 1) * (q - 2) / 2, (q - 1) * q / 2};
    int64_t grand = 0;
    for (int fam = 0; fam < 4; ++fam) {
        int64_t tot = 0;
        for (int j = 0; j < m; ++j) {
            if (static_cast<int>(irr[j].family) != fam) continue;
            tot += irr[j].dim(q) * (rank[j][0] + rank[j][1] + rank[j][2] + rank[j][3]);
        }
        grand += tot;
        r.add(std::string("trace contribution of the ") +
                  family_letter(static_cast<IrrepFamily>(fam)) + " family",
              tot == fam_want[fam],
              std::to_string(tot) + " vs " + std::to_string(fam_want[fam]));
    }
    r.add("total regular trace is q(q+1)", grand == q * (q + 1), std::to_string(grand));

    const std::array<int64_t, 4> tr_want{1, (q + 1) * (q - 2) / 2, q * (q - 1) / 2, 2 * q};
    for (int i = 0; i < 4; ++i) {
        int64_t tot = 0;
        for (int j = 0; j < m; ++j) tot += irr[j].dim(q) * rank[j][i];
        r.add("regular trace of pi~" + std::to_string(i + 1) + " from the ranks",
              tot == tr_want[i], std::to_string(tot) + " vs " + std::to_string(tr_want[i]));
        Rational exact = Rational(t.group().n()) * pts[i].coeff(t.group().identity());
        r.add("regular trace of pi~" + std::to_string(i + 1) + " from the identity coefficient",
              exact == Rational(tr_want[i]), exact.str());
    }
    return r;
}

Report mean_values_check(int64_t q) {
    if (q < 5 || q % 2 == 0)
        throw UnsupportedField("mean-value rows need odd q >= 5, got q=" + std::to_string(q));
    CharTable t(q);
    Report r;
    r.title = "mean values q=" + std::to_string(q);
    const ConjClasses& cc = t.classes();

    std::array<std::vector<int64_t>, kNumRefined> by_type;
    for (int64_t c = 0; c < cc.num_classes(); ++c)
        by_type[idx(cc.info(c).refined)].push_back(c);

    auto mean = [&](const IrrepSpec& s, RefinedType rt) {
        std::complex<double> acc = 0.0;
        for (int64_t c : by_type[idx(rt)]) acc += t.value(s, c);
        return acc / static_cast<double>(by_type[idx(rt)].size());
    };
    const std::array<RefinedType, kNumRefined> types{
        RefinedType::Central,           RefinedType::Unipotent,
        RefinedType::SplitOpposite,     RefinedType::SplitGeneric,
        RefinedType::IrreducibleTraceZero, RefinedType::IrreducibleTraceNonzero};

    auto check_row = [&](const IrrepSpec& s, const std::array<double, kNumRefined>& want,
                         const std::string& label) {
        for (int k = 0; k < kNumRefined; ++k) {
            std::complex<double> got = mean(s, types[k]);
            bool ok = std::abs(got - want[k]) <= 1e-9;
            r.add("mean of " + label + " over " + refined_label(types[k], true) + " classes", ok,
                  cx_str(got) + " vs " + std::to_string(want[k]));
        }
    };

    const double L = q % 4 == 1 ? 1.0 : -1.0;
    const double dq = static_cast<double>(q);
    check_row({IrrepFamily::V, t.legendre_exponent(), 0},
              {dq, 0.0, L, -(1.0 + L) / (dq - 3.0), L, (1.0 - L) / (dq - 1.0)},
              "the residue-twisted V");

    for (const auto& w : t.relevant_w()) {
        const double a = t.alpha_minus_one(w);
        check_row(w, {dq + 1.0, 1.0, 2.0 * a, -2.0 * (1.0 + a) / (dq - 3.0), 0.0, 0.0}, w.name());
    }
    for (const auto& x : t.relevant_x()) {
        const double sg = t.sigma_of(x);
        check_row(x, {dq - 1.0, -1.0, 0.0, 0.0, -2.0 * sg, 2.0 * (1.0 + sg) / (dq - 1.0)},
                  x.name());
    }
    return r;
}

}  // namespace scring
