#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "nilrev/errors.hpp"

namespace nilrev {

// Exact rational number with arbitrary-precision numerator and denominator.
// Canonical form is maintained after every operation: denominator > 0,
// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    explicit Rational(const mpq_class& v);

    // Accepts "p" or "p/q" with optional leading sign.
    static Rational from_string(const std::string& s);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return sgn(v_) < 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inverse() const;
    Rational abs() const { return is_negative() ? -*this : *this; }

    bool operator==(const Rational& o) const { return mpq_equal(v_.get_mpq_t(), o.v_.get_mpq_t()) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return cmp(v_, o.v_) < 0; }
    bool operator>(const Rational& o) const { return cmp(v_, o.v_) > 0; }

    // Combined bit size of numerator and denominator; pivot-selection heuristic.
    std::size_t bit_size() const {
        return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
    }

    std::string str() const;

private:
    mpq_class v_;  // kept canonical
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace nilrev
