#include "scring/gf.hpp"

#include <algorithm>

namespace scring {

namespace {

// Dense polynomial arithmetic over GF(p) on ascending coefficient vectors,
// used only while constructing field tables.
using Poly = std::vector<int64_t>;

int64_t pmod(int64_t a, int64_t p) {
    int64_t r = a % p;
    return r < 0 ? r + p : r;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = pmod(r[i + j] + a[i] * b[j], p);
    trim(r);
    return r;
}

// Remainder of a modulo monic m.
Poly poly_rem(Poly a, const Poly& m, int64_t p) {
    trim(a);
    while (a.size() >= m.size()) {
        int64_t lead = a.back();
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = pmod(a[shift + i] - lead * m[i], p);
        trim(a);
    }
    return a;
}

bool poly_is_zero(const Poly& a) {
    return std::all_of(a.begin(), a.end(), [](int64_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg(f)/2.
bool irreducible(const Poly& f, int64_t p) {
    int64_t deg = static_cast<int64_t>(f.size()) - 1;
    for (int64_t d = 1; 2 * d <= deg; ++d) {
        int64_t count = 1;
        for (int64_t i = 0; i < d; ++i) count *= p;
        for (int64_t code = 0; code < count; ++code) {
            Poly g(d + 1, 0);
            int64_t c = code;
            for (int64_t i = 0; i < d; ++i) {
                g[i] = c % p;
                c /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(int64_t q) : q_(q) {
    if (q < 2) throw NotPrimePower("q must be at least 2");
    int64_t p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;  // q itself is prime
    int64_t k = 0, rest = q;
    while (rest > 1) {
        if (rest % p != 0) throw NotPrimePower(std::to_string(q) + " is not a prime power");
        rest /= p;
        ++k;
    }
    p_ = p;
    k_ = k;

    if (k_ == 1) {
        modulus_ = {0, 1};
    } else {
        int64_t count = 1;
        for (int64_t i = 0; i < k_; ++i) count *= p_;
        for (int64_t code = 0; code < count; ++code) {
            Poly f(k_ + 1, 0);
            int64_t c = code;
            for (int64_t i = 0; i < k_; ++i) {
                f[i] = c % p_;
                c /= p_;
            }
            f[k_] = 1;
            if (irreducible(f, p_)) {
                modulus_ = f;
                break;
            }
        }
    }
    build_tables();
}

void Field::build_tables() {
    auto decode = [&](int64_t x) {
        Poly c(k_, 0);
        for (int64_t i = 0; i < k_; ++i) {
            c[i] = x % p_;
            x /= p_;
        }
        return c;
    };
    auto encode = [&](const Poly& c) {
        int64_t x = 0;
        for (int64_t i = k_ - 1; i >= 0; --i)
            x = x * p_ + (i < static_cast<int64_t>(c.size()) ? c[i] : 0);
        return x;
    };

    add_.assign(q_ * q_, 0);
    mul_.assign(q_ * q_, 0);
    neg_.assign(q_, 0);
    for (int64_t a = 0; a < q_; ++a) {
        Poly ca = decode(a);
        Poly cn(k_, 0);
        for (int64_t i = 0; i < k_; ++i) cn[i] = pmod(-ca[i], p_);
        neg_[a] = encode(cn);
        for (int64_t b = 0; b < q_; ++b) {
            Poly cb = decode(b);
            Poly cs(k_, 0);
            for (int64_t i = 0; i < k_; ++i) cs[i] = pmod(ca[i] + cb[i], p_);
            add_[a * q_ + b] = encode(cs);
            Poly cp = poly_rem(poly_mul(ca, cb, p_), modulus_, p_);
            mul_[a * q_ + b] = encode(cp);
        }
    }

    inv_.assign(q_, 0);
    for (int64_t a = 1; a < q_; ++a)
        for (int64_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = b;
                break;
            }

    // Least generator: x generates iff x^((q-1)/l) != 1 for every prime l | q-1.
    std::vector<int64_t> primes;
    int64_t n = q_ - 1;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) primes.push_back(n);
    gen_ = 1;
    for (int64_t x = 1; x < q_; ++x) {
        bool ok = true;
        for (int64_t l : primes)
            if (pow(x, (q_ - 1) / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen_ = x;
            break;
        }
    }

    dlog_.assign(q_, 0);
    int64_t acc = 1;
    for (int64_t e = 0; e < q_ - 1; ++e) {
        dlog_[acc] = e;
        acc = mul(acc, gen_);
    }
}

int64_t Field::pow(int64_t a, int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int Field::legendre(int64_t x) const {
    if (p_ == 2) throw EvenCharacteristic("Legendre symbol needs odd q");
    if (x == 0) return 0;
    return pow(x, (q_ - 1) / 2) == 1 ? 1 : -1;
}

std::vector<int64_t> Field::coeffs(int64_t x) const {
    std::vector<int64_t> c(k_, 0);
    for (int64_t i = 0; i < k_; ++i) {
        c[i] = x % p_;
        x /= p_;
    }
    return c;
}

ExtField::ExtField(const Field& base) : base_(base), q2_(base.q() * base.q()) {
    const int64_t q = base_.q();
    // Least (m0, m1) with t^2 + m1 t + m0 irreducible over GF(q): a quadratic
    // is irreducible iff it has no root.
    m0_ = -1;
    for (int64_t code = 0; code < q * q && m0_ < 0; ++code) {
        int64_t m0 = code % q, m1 = code / q;
        bool has_root = false;
        for (int64_t x = 0; x < q && !has_root; ++x) {
            int64_t v = base_.add(base_.add(base_.mul(x, x), base_.mul(m1, x)), m0);
            has_root = (v == 0);
        }
        if (!has_root) {
            m0_ = m0;
            m1_ = m1;
        }
    }

    frob_t_ = pow(q, q);  // index q encodes the generator t = (0,1)

    std::vector<int64_t> primes;
    int64_t n = q2_ - 1;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            primes.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) primes.push_back(n);
    gen_ = 1;
    for (int64_t x = 1; x < q2_; ++x) {
        bool ok = true;
        for (int64_t l : primes)
            if (pow(x, (q2_ - 1) / l) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            gen_ = x;
            break;
        }
    }

    dlog_.assign(q2_, 0);
    int64_t acc = 1;
    for (int64_t e = 0; e < q2_ - 1; ++e) {
        dlog_[acc] = e;
        acc = mul(acc, gen_);
    }
}

int64_t ExtField::add(int64_t a, int64_t b) const {
    const int64_t q = base_.q();
    return base_.add(a % q, b % q) + q * base_.add(a / q, b / q);
}

int64_t ExtField::neg(int64_t a) const {
    const int64_t q = base_.q();
    return base_.neg(a % q) + q * base_.neg(a / q);
}

int64_t ExtField::sub(int64_t a, int64_t b) const { return add(a, neg(b)); }

int64_t ExtField::mul(int64_t a, int64_t b) const {
    const int64_t q = base_.q();
    int64_t a0 = a % q, a1 = a / q, b0 = b % q, b1 = b / q;
    // (a0 + a1 t)(b0 + b1 t) with t^2 = -m1 t - m0.
    int64_t hi = base_.mul(a1, b1);
    int64_t c0 = base_.sub(base_.mul(a0, b0), base_.mul(m0_, hi));
    int64_t c1 = base_.sub(base_.add(base_.mul(a0, b1), base_.mul(a1, b0)), base_.mul(m1_, hi));
    return c0 + q * c1;
}

int64_t ExtField::pow(int64_t a, int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    int64_t r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

int64_t ExtField::inv(int64_t a) const {
    if (a == 0) throw ZeroInverse("inverse of zero extension element");
    return pow(a, q2_ - 2);
}

int64_t ExtField::frobenius(int64_t a) const {
    const int64_t q = base_.q();
    // (a0 + a1 t)^q = a0 + a1 t^q since x -> x^q fixes GF(q) and is additive.
    return add(a % q, mul(embed(a / q), frob_t_));
}

int64_t ExtField::norm(int64_t a) const {
    int64_t n = mul(a, frobenius(a));
    if (n / base_.q() != 0) throw Error("norm left the base field");
    return n % base_.q();
}

int64_t ExtField::trace(int64_t a) const {
    int64_t t = add(a, frobenius(a));
    if (t / base_.q() != 0) throw Error("trace left the base field");
    return t % base_.q();
}

}  // namespace scring
