#include "scring/sl2.hpp"

#include <string>

namespace scring {

SupportClass support_of(const Mat2& m) {
    const bool za = m.a == 0, zb = m.b == 0, zc = m.c == 0, zd = m.d == 0;
    const int zeros = int(za) + int(zb) + int(zc) + int(zd);
    if (zeros == 0) return SupportClass::C;
    if (zeros == 1) {
        if (zc) return SupportClass::Dp;
        if (zb) return SupportClass::Dm;
        if (zd) return SupportClass::Ep;
        return SupportClass::Em;
    }
    if (zeros == 2) {
        if (zb && zc) return SupportClass::A;
        if (za && zd) return SupportClass::B;
    }
    throw UnreachablePattern("zero pattern of a singular matrix");
}

GroupTable::GroupTable(const Field& f, GroupKind kind, int64_t det_order)
    : f_(f), kind_(kind), det_order_(det_order) {
    const int64_t q = f_.q();
    if (kind_ == GroupKind::DetSubgroup) {
        if (det_order_ < 1 || (q - 1) % det_order_ != 0)
            throw InvalidSpec("determinant subgroup order must divide q-1");
    }
    const int64_t step =
        kind_ == GroupKind::DetSubgroup ? (q - 1) / det_order_ : 0;

    const int64_t total = q * q * q * q;
    code_to_idx_.assign(total, -1);

    for (int64_t code = 0; code < total; ++code) {
        Mat2 m{static_cast<int32_t>(code / (q * q * q)),
               static_cast<int32_t>((code / (q * q)) % q),
               static_cast<int32_t>((code / q) % q),
               static_cast<int32_t>(code % q)};
        const int64_t det = f_.sub(f_.mul(m.a, m.d), f_.mul(m.b, m.c));
        if (det == 0) continue;

        bool member = false;
        int64_t partner_code = -1;
        switch (kind_) {
            case GroupKind::SL2:
                member = (det == 1);
                break;
            case GroupKind::GL2:
                member = true;
                break;
            case GroupKind::DetSubgroup:
                member = (f_.dlog(det) % step == 0);
                break;
            case GroupKind::PSL2: {
                if (det != 1) break;
                Mat2 nm{static_cast<int32_t>(f_.neg(m.a)), static_cast<int32_t>(f_.neg(m.b)),
                        static_cast<int32_t>(f_.neg(m.c)), static_cast<int32_t>(f_.neg(m.d))};
                partner_code = pack(nm);
                member = (code <= partner_code);
                break;
            }
        }
        if (!member) continue;

        const auto i = static_cast<int32_t>(elems_.size());
        elems_.push_back(m);
        code_to_idx_[code] = i;
        if (partner_code >= 0) code_to_idx_[partner_code] = i;
    }

    const int64_t n = static_cast<int64_t>(elems_.size());
    support_.resize(n);
    inv_.resize(n);
    for (int64_t i = 0; i < n; ++i) {
        const Mat2& m = elems_[i];
        support_[i] = static_cast<int8_t>(support_of(m));
        const int64_t det = f_.sub(f_.mul(m.a, m.d), f_.mul(m.b, m.c));
        const int64_t di = f_.inv(det);
        Mat2 im{static_cast<int32_t>(f_.mul(di, m.d)),
                static_cast<int32_t>(f_.mul(di, f_.neg(m.b))),
                static_cast<int32_t>(f_.mul(di, f_.neg(m.c))),
                static_cast<int32_t>(f_.mul(di, m.a))};
        inv_[i] = static_cast<int32_t>(code_to_idx_[pack(im)]);
    }

    identity_ = code_to_idx_[pack(Mat2{1, 0, 0, 1})];
}

int64_t GroupTable::index_of(const Mat2& m) const {
    const int64_t q = f_.q();
    if (m.a < 0 || m.a >= q || m.b < 0 || m.b >= q || m.c < 0 || m.c >= q || m.d < 0 ||
        m.d >= q)
        throw GroupMismatch("matrix entries out of field range");
    const int64_t i = code_to_idx_[pack(m)];
    if (i < 0) throw GroupMismatch("matrix is not a member of this group");
    return i;
}

const char* refined_label(RefinedType t, bool odd_q) {
    switch (t) {
        case RefinedType::Central:
            return "a";
        case RefinedType::Unipotent:
            return "b";
        case RefinedType::SplitOpposite:
            return "c(x,-x)";
        case RefinedType::SplitGeneric:
            return odd_q ? "c(x,y)" : "c";
        case RefinedType::IrreducibleTraceZero:
            return "d(tr0)";
        case RefinedType::IrreducibleTraceNonzero:
            return odd_q ? "d(tr!=0)" : "d";
    }
    return "?";
}

ConjClasses::ConjClasses(const GroupTable& g) : g_(g), ext_(g.field()) {
    if (g_.kind() != GroupKind::GL2)
        throw GroupMismatch("conjugacy classification expects a GL2 table");
    const Field& f = g_.field();
    const int64_t q = f.q();
    const bool odd = f.p() != 2;

    class_of_.assign(g_.n(), -1);
    for (int64_t i = 0; i < g_.n(); ++i) {
        const int64_t t = g_.trace(i);
        const int64_t dt = g_.det(i);

        ClassFamily fam;
        RefinedType ref;
        int64_t u = 0, v = 0;

        std::vector<int64_t> roots;
        for (int64_t x = 0; x < q; ++x)
            if (f.add(f.sub(f.mul(x, x), f.mul(t, x)), dt) == 0) roots.push_back(x);

        if (roots.size() == 2) {
            fam = ClassFamily::Split;
            u = roots[0];
            v = roots[1];
            ref = (odd && v == f.neg(u)) ? RefinedType::SplitOpposite
                                         : RefinedType::SplitGeneric;
        } else if (roots.size() == 1) {
            u = roots[0];
            const Mat2& m = g_.mat(i);
            const bool scalar = (m.b == 0 && m.c == 0 && m.a == m.d);
            fam = scalar ? ClassFamily::Central : ClassFamily::Unipotent;
            ref = scalar ? RefinedType::Central : RefinedType::Unipotent;
        } else {
            fam = ClassFamily::Irreducible;
            int64_t root = -1;
            const int64_t te = ext_.embed(t), de = ext_.embed(dt);
            for (int64_t x = q; x < ext_.size() && root < 0; ++x)
                if (ext_.add(ext_.sub(ext_.mul(x, x), ext_.mul(te, x)), de) == 0) root = x;
            if (root < 0) throw Error("characteristic polynomial with no quadratic root");
            const int64_t fr = ext_.frobenius(root);
            u = root < fr ? root : fr;
            ref = (odd && t == 0) ? RefinedType::IrreducibleTraceZero
                                  : RefinedType::IrreducibleTraceNonzero;
        }

        const auto key = std::make_tuple(static_cast<int>(fam), u, v);
        auto it = by_label_.find(key);
        int64_t cid;
        if (it == by_label_.end()) {
            cid = static_cast<int64_t>(info_.size());
            by_label_.emplace(key, cid);
            info_.push_back(ConjClassInfo{fam, ref, u, v, 0, i});
        } else {
            cid = it->second;
        }
        info_[cid].size += 1;
        class_of_[i] = static_cast<int32_t>(cid);
    }
}

int64_t ConjClasses::find_class(ClassFamily fam, int64_t u, int64_t v) const {
    auto it = by_label_.find(std::make_tuple(static_cast<int>(fam), u, v));
    if (it == by_label_.end()) throw GroupMismatch("no conjugacy class with this label");
    return it->second;
}

std::array<int64_t, kNumRefined> ConjClasses::refined_class_counts() const {
    std::array<int64_t, kNumRefined> counts{};
    for (const auto& ci : info_) counts[static_cast<int>(ci.refined)] += 1;
    return counts;
}

}  // namespace scring
