#pragma once

#include <optional>
#include <vector>

#include "nilrev/rational.hpp"

namespace nilrev {

// Dense matrix of exact rationals. Backs every realified computation:
// ranks, kernels, linear solves and inverses for all three scalar rings
// go through this one solver.
class RatMatrix {
public:
    RatMatrix(int rows, int cols);
    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
    Rational& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }

    RatMatrix operator+(const RatMatrix& o) const;
    RatMatrix operator-(const RatMatrix& o) const;
    RatMatrix operator*(const RatMatrix& o) const;
    RatMatrix operator-() const;
    bool operator==(const RatMatrix& o) const;
    bool operator!=(const RatMatrix& o) const { return !(*this == o); }

    bool is_zero() const;
    void swap_rows(int a, int b);

    int rank() const;

    // Reduced row echelon form with first-nonzero pivoting (deterministic,
    // no size heuristics; kernel bases built from this must be reproducible).
    RatMatrix rref(std::vector<int>* pivot_cols = nullptr) const;

    // Right-kernel basis as columns, ordered by increasing free-column index.
    std::vector<RatMatrix> kernel_basis() const;

    // Particular solution of A x = b with free variables set to zero,
    // or nullopt if the system is inconsistent. b may have several columns.
    std::optional<RatMatrix> solve(const RatMatrix& rhs) const;

    std::optional<RatMatrix> inverse() const;

private:
    int rows_, cols_;
    std::vector<Rational> e_;
};

}  // namespace nilrev
