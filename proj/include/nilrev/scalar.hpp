#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "nilrev/ratmat.hpp"
#include "nilrev/rational.hpp"

namespace nilrev {

// The three exact division rings all matrix entries live in.
enum class Ring { Rat, Gauss, Quat };

// Rational dimension of the ring: 1, 2 or 4.
int ring_dim(Ring r);
const char* ring_name(Ring r);
Ring ring_from_name(const std::string& name);

// A value in one of the three rings, stored as a + b i + c j + d k with
// exact rational components. Components beyond the ring's dimension are
// identically zero (invariant enforced at construction). Multiplication
// follows ij = k, jk = i, ki = j, i^2 = j^2 = k^2 = -1; it is commutative
// over Rat and Gauss and noncommutative over Quat.
class Scalar {
public:
    explicit Scalar(Ring r) : ring_(r) {}

    static Scalar zero(Ring r) { return Scalar(r); }
    static Scalar one(Ring r) { return integer(r, 1); }
    static Scalar integer(Ring r, long v);
    static Scalar rational(Ring r, const Rational& a);
    static Scalar gauss(const Rational& re, const Rational& im);
    static Scalar quat(const Rational& a, const Rational& b, const Rational& c, const Rational& d);
    // Validates that components beyond ring_dim(r) are zero.
    static Scalar from_components(Ring r, const std::array<Rational, 4>& c);

    Ring ring() const { return ring_; }
    const Rational& comp(int i) const { return c_[static_cast<std::size_t>(i)]; }
    const Rational& re() const { return c_[0]; }
    const Rational& im() const { return c_[1]; }

    bool is_zero() const;
    bool is_one() const;
    // True when the value is the rational r (imaginary components zero).
    bool equals_rational(const Rational& r) const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Standard conjugation: identity on Rat, complex conjugate on Gauss,
    // quaternion conjugate on Quat. conj(xy) = conj(y) conj(x).
    Scalar conj() const;
    // a^2 + b^2 + c^2 + d^2; zero iff the value is zero.
    Rational norm() const;
    // Two-sided multiplicative inverse; throws ZeroInverseError on zero.
    Scalar inverse() const;

    std::string str() const;

private:
    Ring ring_;
    std::array<Rational, 4> c_{};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Matrices of x |-> q x and x |-> x q on the rational coordinates (a, b, c, d)
// of x, truncated to the ring's dimension. Both are ring homomorphisms in the
// appropriate order: left(pq) = left(p) left(q), right(pq) = right(q) right(p).
// Over Rat and Gauss the two coincide.
RatMatrix left_mul_matrix(const Scalar& q);
RatMatrix right_mul_matrix(const Scalar& q);

// Scalar literal: rational `p/q` or `p`; Gaussian `<rat>+<rat>i`; quaternion
// with optional i, j, k terms and signs, e.g. `1/2-3i+k`. Whitespace-insensitive.
// ParseError carries the character offset in `column`.
Scalar parse_scalar(const std::string& text, Ring ring);

}  // namespace nilrev
