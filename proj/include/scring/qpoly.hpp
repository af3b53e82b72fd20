#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "scring/errors.hpp"

namespace scring {

// Integer polynomial in the field-size symbol q, ascending coefficients.
// Structure constants stay at degree <= 3; the type itself does not cap the
// degree so intermediate products are representable.
class QPoly {
public:
    QPoly() = default;
    QPoly(std::initializer_list<int64_t> ascending) : c_(ascending) { trim(); }
    explicit QPoly(std::vector<int64_t> ascending) : c_(std::move(ascending)) { trim(); }

    static QPoly constant(int64_t v) { return QPoly{v}; }
    static QPoly variable() { return QPoly{0, 1}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : 0;
    }

    int64_t eval(int64_t q) const;

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(int64_t s) const;

    bool operator==(const QPoly& o) const { return c_ == o.c_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    // Exact quotient by (q - r); throws NonIntegerFit when the remainder is
    // nonzero, i.e. r is not a root.
    QPoly div_exact_root(int64_t r) const;

    // "q^3 - 4*q^2 + 5*q - 2", "0".
    std::string str() const;

private:
    void trim();

    std::vector<int64_t> c_;
};

}  // namespace scring
