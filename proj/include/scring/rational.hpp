#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "scring/checked.hpp"
#include "scring/errors.hpp"

namespace scring {

// Exact rational number over checked int64. Always stored reduced with a
// positive denominator, so equality is plain memberwise comparison.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
    Rational(int64_t n, int64_t d) : num_(n), den_(d) { normalize(); }

    int64_t num() const { return num_; }
    int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    int64_t as_integer() const {
        if (den_ != 1) throw NotNearInteger("rational " + str() + " is not an integer");
        return num_;
    }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const { return Rational(ck_neg(num_), den_, already_reduced{}); }

    Rational operator+(const Rational& o) const {
        int64_t g = std::gcd(den_, o.den_);
        int64_t l = ck_mul(den_ / g, o.den_);
        int64_t n = ck_add(ck_mul(num_, o.den_ / g), ck_mul(o.num_, den_ / g));
        return Rational(n, l);
    }

    Rational operator-(const Rational& o) const { return *this + (-o); }

    Rational operator*(const Rational& o) const {
        // Cross-reduce before multiplying to keep intermediates small.
        int64_t g1 = std::gcd(abs64(num_), o.den_);
        int64_t g2 = std::gcd(abs64(o.num_), den_);
        int64_t n = ck_mul(num_ / g1, o.num_ / g2);
        int64_t d = ck_mul(den_ / g2, o.den_ / g1);
        return Rational(n, d, already_reduced{});
    }

    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw ZeroInverse("division of rational by zero");
        return *this * Rational(o.den_, o.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    // "7", "-3/40", "0".
    std::string str() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

private:
    struct already_reduced {};
    Rational(int64_t n, int64_t d, already_reduced) : num_(n), den_(d) {}

    static int64_t abs64(int64_t v) { return v < 0 ? ck_neg(v) : v; }

    void normalize() {
        if (den_ == 0) throw ZeroInverse("rational with zero denominator");
        if (den_ < 0) {
            num_ = ck_neg(num_);
            den_ = ck_neg(den_);
        }
        int64_t g = std::gcd(abs64(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    int64_t num_;
    int64_t den_;
};

inline Rational operator*(int64_t a, const Rational& r) { return Rational(a) * r; }

}  // namespace scring
