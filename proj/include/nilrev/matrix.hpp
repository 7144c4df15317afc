#pragma once

#include <vector>

#include "nilrev/scalar.hpp"

namespace nilrev {

// Dense matrix over one of the scalar rings. Entries represent right
// K-linear maps in a chosen basis; the order of factors in products is
// significant over Quat. Indices are 0-based in code, 1-based in docs.
class Matrix {
public:
    Matrix(Ring ring, int rows, int cols);
    static Matrix identity(Ring ring, int n);
    // Elementary matrix with a one at (i, j).
    static Matrix unit(Ring ring, int n, int i, int j);

    Ring ring() const { return ring_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    int n() const;

    const Scalar& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    Scalar& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    // Scale every entry by r (rationals are central, so the side is moot).
    Matrix scaled(const Rational& r) const;
    Matrix pow(int k) const;

    bool is_zero() const;
    bool is_strictly_upper() const;
    bool is_upper() const;
    // Diagonal entries all +1 or -1.
    bool has_sign_diagonal() const;

    // Rational coordinates: each entry becomes a ring_dim x ring_dim block of
    // left-multiplication form, so realify(A) realify(B) = realify(A B) and
    // realify(A) * coords(v) = coords(A v).
    RatMatrix realify() const;
    // Inverse of realify; validates every block has left-multiplication shape.
    static Matrix derealify(const RatMatrix& m, Ring ring);

    // Column vector <-> stacked rational coordinates.
    static RatMatrix coords(const Matrix& column);
    static Matrix from_coords(const RatMatrix& column, Ring ring);

private:
    Ring ring_;
    int rows_, cols_;
    std::vector<Scalar> e_;
};

// Element of u_n(K): strictly upper triangular, hence nilpotent of index <= n.
class NilpotentUpper {
public:
    explicit NilpotentUpper(Matrix m);
    const Matrix& matrix() const { return m_; }
    Ring ring() const { return m_.ring(); }
    int n() const { return m_.rows(); }
    // Membership in u_n^*: every (i, i+1) entry nonzero.
    bool is_star() const;
    bool operator==(const NilpotentUpper& o) const { return m_ == o.m_; }

private:
    Matrix m_;
};

// Element of U_n^{+-1}(K): upper triangular with diagonal entries +-1.
// The all-plus-diagonal case is U_n(K).
class SignedUnipotent {
public:
    explicit SignedUnipotent(Matrix m);
    static SignedUnipotent identity(Ring ring, int n);
    static SignedUnipotent diagonal(Ring ring, const std::vector<int>& signs);

    const Matrix& matrix() const { return m_; }
    Ring ring() const { return m_.ring(); }
    int n() const { return m_.rows(); }
    std::vector<int> diagonal_signs() const;
    bool all_plus_diagonal() const;
    // Membership in U_n^*: all-plus diagonal and every (i, i+1) entry nonzero.
    bool is_star() const;
    bool operator==(const SignedUnipotent& o) const { return m_ == o.m_; }

    SignedUnipotent operator*(const SignedUnipotent& o) const;

private:
    Matrix m_;
};

// Inverse by back-substitution; no determinants, valid over Quat.
SignedUnipotent invert(const SignedUnipotent& g);

// Ad(g) X = g X g^{-1}.
Matrix conjugate(const SignedUnipotent& g, const Matrix& x);

// g * g == Id, exactly.
bool is_involution(const SignedUnipotent& g);

}  // namespace nilrev
