#include "nilrev/ratmat.hpp"

#include <limits>
#include <utility>

#include "nilrev/errors.hpp"

namespace nilrev {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatchError("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * cols, Rational());
}

RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatchError("matrix add");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatchError("matrix sub");
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatchError("matrix mul");
    RatMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Rational& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

RatMatrix RatMatrix::operator-() const {
    RatMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

bool RatMatrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

void RatMatrix::swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

namespace {

// Forward elimination over the first coeff_cols columns; trailing columns ride
// along as right-hand sides. Pivot choice: smallest combined bit size, lowest
// row index on ties. Returns the pivot columns in order.
std::vector<int> forward_eliminate(RatMatrix& M, int coeff_cols) {
    std::vector<int> pivots;
    const int m = M.rows();
    const int w = M.cols();
    int r = 0;
    for (int c = 0; c < coeff_cols && r < m; ++c) {
        int p = -1;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (int i = r; i < m; ++i) {
            if (M(i, c).is_zero()) continue;
            std::size_t s = M(i, c).bit_size();
            if (s < best) {
                best = s;
                p = i;
            }
        }
        if (p < 0) continue;
        M.swap_rows(r, p);
        const Rational piv = M(r, c);
        for (int i = r + 1; i < m; ++i) {
            if (M(i, c).is_zero()) continue;
            Rational f = M(i, c) / piv;
            M(i, c) = Rational();
            for (int j = c + 1; j < w; ++j)
                if (!M(r, j).is_zero()) M(i, j) -= f * M(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int RatMatrix::rank() const {
    RatMatrix M = *this;
    return static_cast<int>(forward_eliminate(M, cols_).size());
}

RatMatrix RatMatrix::rref(std::vector<int>* pivot_cols) const {
    RatMatrix M = *this;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!M(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        M.swap_rows(r, p);
        Rational inv = M(r, c).inverse();
        M(r, c) = Rational(1);
        for (int j = c + 1; j < cols_; ++j)
            if (!M(r, j).is_zero()) M(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || M(i, c).is_zero()) continue;
            Rational f = M(i, c);
            M(i, c) = Rational();
            for (int j = c + 1; j < cols_; ++j)
                if (!M(r, j).is_zero()) M(i, j) -= f * M(r, j);
        }
        if (pivot_cols) pivot_cols->push_back(c);
        ++r;
    }
    return M;
}

std::vector<RatMatrix> RatMatrix::kernel_basis() const {
    std::vector<int> piv;
    RatMatrix R = rref(&piv);
    std::vector<bool> is_piv(static_cast<std::size_t>(cols_), false);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
    std::vector<RatMatrix> out;
    for (int f = 0; f < cols_; ++f) {
        if (is_piv[static_cast<std::size_t>(f)]) continue;
        RatMatrix v(cols_, 1);
        v(f, 0) = Rational(1);
        for (std::size_t k = 0; k < piv.size(); ++k)
            v(piv[k], 0) = -R(static_cast<int>(k), f);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<RatMatrix> RatMatrix::solve(const RatMatrix& rhs) const {
    if (rhs.rows() != rows_) throw DimensionMismatchError("solve: rhs row count");
    const int m = rows_, n = cols_, k = rhs.cols();

    // Cheap reject: a row with no unknowns and a nonzero right-hand side.
    for (int i = 0; i < m; ++i) {
        bool coeffs_zero = true;
        for (int j = 0; j < n; ++j)
            if (!(*this)(i, j).is_zero()) {
                coeffs_zero = false;
                break;
            }
        if (!coeffs_zero) continue;
        for (int j = 0; j < k; ++j)
            if (!rhs(i, j).is_zero()) return std::nullopt;
    }

    RatMatrix M(m, n + k);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) M(i, j) = (*this)(i, j);
        for (int j = 0; j < k; ++j) M(i, n + j) = rhs(i, j);
    }
    std::vector<int> pivots = forward_eliminate(M, n);
    const int r = static_cast<int>(pivots.size());
    for (int i = r; i < m; ++i)
        for (int j = n; j < n + k; ++j)
            if (!M(i, j).is_zero()) return std::nullopt;

    RatMatrix x(n, k);
    for (int step = r - 1; step >= 0; --step) {
        int c = pivots[static_cast<std::size_t>(step)];
        for (int col = 0; col < k; ++col) {
            Rational s = M(step, n + col);
            for (int j = c + 1; j < n; ++j)
                if (!M(step, j).is_zero() && !x(j, col).is_zero()) s -= M(step, j) * x(j, col);
            x(c, col) = s / M(step, c);
        }
    }
    return x;
}

std::optional<RatMatrix> RatMatrix::inverse() const {
    if (rows_ != cols_) throw DimensionMismatchError("inverse of non-square matrix");
    return solve(identity(rows_));
}

}  // namespace nilrev
