#include "scring/qpoly.hpp"

#include "scring/checked.hpp"

namespace scring {

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int64_t QPoly::eval(int64_t q) const {
    int64_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = ck_add(ck_mul(r, q), *it);
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<int64_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = ck_add(coeff(i), o.coeff(i));
    return QPoly(std::move(r));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    std::vector<int64_t> r(c_);
    for (auto& v : r) v = ck_neg(v);
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    std::vector<int64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = ck_add(r[i + j], ck_mul(c_[i], o.c_[j]));
    return QPoly(std::move(r));
}

QPoly QPoly::operator*(int64_t s) const {
    std::vector<int64_t> r(c_);
    for (auto& v : r) v = ck_mul(v, s);
    return QPoly(std::move(r));
}

QPoly QPoly::div_exact_root(int64_t r) const {
    if (c_.empty()) return {};
    std::vector<int64_t> out(c_.size() - 1, 0);
    int64_t carry = 0;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 1; --i) {
        carry = ck_add(ck_mul(carry, r), c_[i]);
        out[i - 1] = carry;
    }
    if (ck_add(ck_mul(carry, r), c_[0]) != 0)
        throw NonIntegerFit("polynomial " + str() + " is not divisible by (q - " +
                            std::to_string(r) + ")");
    return QPoly(std::move(out));
}

std::string QPoly::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        int64_t v = c_[i];
        if (v == 0) continue;
        if (s.empty()) {
            if (v < 0) s += "-";
        } else {
            s += v < 0 ? " - " : " + ";
        }
        int64_t a = v < 0 ? -v : v;
        if (a != 1 || i == 0) s += std::to_string(a);
        if (i > 0) {
            if (a != 1) s += "*";
            s += "q";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace scring
