#pragma once

#include <cstdint>
#include <vector>

#include "scring/errors.hpp"

namespace scring {

// GF(p^k) with a canonical presentation: the modulus is the lexicographically
// least monic irreducible of degree k over GF(p), where polynomials are
// ordered by their coefficient tuple (c_0,...,c_{k-1}) read as a base-p
// integer. Elements are indexed 0..q-1; index sum(c_i p^i) encodes the
// coefficient vector of the residue-class representative, so the index order
// is the canonical enumeration order used everywhere else in the library.
class Field {
public:
    explicit Field(int64_t q);

    int64_t p() const { return p_; }
    int64_t k() const { return k_; }
    int64_t q() const { return q_; }

    // Monic modulus, length k+1, ascending coefficients; {0,1} (i.e. x) for k=1.
    const std::vector<int64_t>& modulus() const { return modulus_; }

    bool same_as(const Field& o) const {
        return p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_;
    }

    // Arithmetic on element indices.
    int64_t add(int64_t a, int64_t b) const { return add_[a * q_ + b]; }
    int64_t sub(int64_t a, int64_t b) const { return add_[a * q_ + neg_[b]]; }
    int64_t mul(int64_t a, int64_t b) const { return mul_[a * q_ + b]; }
    int64_t neg(int64_t a) const { return neg_[a]; }
    int64_t inv(int64_t a) const {
        if (a == 0) throw ZeroInverse("inverse of zero field element");
        return inv_[a];
    }
    int64_t div(int64_t a, int64_t b) const { return mul(a, inv(b)); }
    int64_t pow(int64_t a, int64_t e) const;

    // Least element (in index order) of multiplicative order q-1.
    int64_t units_generator() const { return gen_; }

    // Discrete log with respect to units_generator(); defined for nonzero x.
    int64_t dlog(int64_t x) const {
        if (x == 0) throw ZeroInverse("dlog of zero");
        return dlog_[x];
    }

    // Legendre symbol as +1 / 0 / -1; odd q only.
    int legendre(int64_t x) const;

    // Coefficient vector (length k) of an element index.
    std::vector<int64_t> coeffs(int64_t x) const;

private:
    void build_tables();

    int64_t p_, k_, q_;
    std::vector<int64_t> modulus_;
    std::vector<int64_t> add_, mul_;   // q*q flat tables
    std::vector<int64_t> neg_, inv_;   // q tables
    std::vector<int64_t> dlog_;
    int64_t gen_;
};

// Safe value wrapper for one field element; mixing elements of fields with
// different descriptors throws DescriptorMismatch.
class Fq {
public:
    Fq(const Field& f, int64_t idx) : f_(&f), v_(idx) {
        if (idx < 0 || idx >= f.q()) throw Error("field element index out of range");
    }

    int64_t idx() const { return v_; }
    const Field& field() const { return *f_; }

    Fq operator+(const Fq& o) const { return Fq(*f_, f_->add(v_, check(o))); }
    Fq operator-(const Fq& o) const { return Fq(*f_, f_->sub(v_, check(o))); }
    Fq operator*(const Fq& o) const { return Fq(*f_, f_->mul(v_, check(o))); }
    Fq operator/(const Fq& o) const { return Fq(*f_, f_->div(v_, check(o))); }
    Fq inv() const { return Fq(*f_, f_->inv(v_)); }
    bool operator==(const Fq& o) const { return v_ == check(o); }
    bool operator!=(const Fq& o) const { return !(*this == o); }

private:
    int64_t check(const Fq& o) const {
        if (f_ != o.f_ && !f_->same_as(*o.f_))
            throw DescriptorMismatch("field elements from different descriptors");
        return o.v_;
    }

    const Field* f_;
    int64_t v_;
};

// GF(q^2) presented over GF(q) by the lexicographically least monic
// irreducible quadratic t^2 + m1 t + m0 (ordered by m0 + q*m1). Elements are
// indexed a0 + q*a1; the embedding of GF(q) is therefore the identity on
// indices 0..q-1.
class ExtField {
public:
    explicit ExtField(const Field& base);

    const Field& base() const { return base_; }
    int64_t q() const { return base_.q(); }
    int64_t size() const { return q2_; }
    int64_t m0() const { return m0_; }
    int64_t m1() const { return m1_; }

    int64_t embed(int64_t x) const { return x; }

    int64_t add(int64_t a, int64_t b) const;
    int64_t sub(int64_t a, int64_t b) const;
    int64_t neg(int64_t a) const;
    int64_t mul(int64_t a, int64_t b) const;
    int64_t inv(int64_t a) const;
    int64_t pow(int64_t a, int64_t e) const;

    int64_t frobenius(int64_t a) const;  // a -> a^q
    int64_t norm(int64_t a) const;       // a * a^q, returned as a base-field index
    int64_t trace(int64_t a) const;      // a + a^q, returned as a base-field index

    // Least element (in index order) of multiplicative order q^2-1.
    int64_t generator() const { return gen_; }

    int64_t dlog(int64_t x) const {
        if (x == 0) throw ZeroInverse("dlog of zero");
        return dlog_[x];
    }

private:
    Field base_;
    int64_t q2_;
    int64_t m0_, m1_;
    int64_t frob_t_;  // image of t under x -> x^q
    int64_t gen_;
    std::vector<int64_t> dlog_;
};

}  // namespace scring
