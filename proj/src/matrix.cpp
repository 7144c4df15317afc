#include "nilrev/matrix.hpp"

#include "nilrev/errors.hpp"

namespace nilrev {

Matrix::Matrix(Ring ring, int rows, int cols) : ring_(ring), rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw DimensionMismatchError("negative matrix dimension");
    e_.assign(static_cast<std::size_t>(rows) * cols, Scalar::zero(ring));
}

Matrix Matrix::identity(Ring ring, int n) {
    Matrix m(ring, n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
    return m;
}

Matrix Matrix::unit(Ring ring, int n, int i, int j) {
    Matrix m(ring, n, n);
    m(i, j) = Scalar::one(ring);
    return m;
}

int Matrix::n() const {
    if (!is_square()) throw DimensionMismatchError("matrix is not square");
    return rows_;
}

namespace {
void require_compatible(const Matrix& a, const Matrix& b, bool product) {
    if (a.ring() != b.ring())
        throw RingMismatchError(std::string("matrix rings differ: ") + ring_name(a.ring()) + " vs " + ring_name(b.ring()));
    if (product) {
        if (a.cols() != b.rows()) throw DimensionMismatchError("matrix product shape mismatch");
    } else if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatchError("matrix shape mismatch");
    }
}
}  // namespace

Matrix Matrix::operator+(const Matrix& o) const {
    require_compatible(*this, o, false);
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    require_compatible(*this, o, false);
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    require_compatible(*this, o, true);
    Matrix r(ring_, rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

Matrix Matrix::operator-() const {
    Matrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != o.e_[i]) return false;
    return true;
}

Matrix Matrix::scaled(const Rational& r) const {
    Matrix out(ring_, rows_, cols_);
    Scalar s = Scalar::rational(ring_, r);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
    return out;
}

Matrix Matrix::pow(int k) const {
    int nn = n();
    if (k < 0) throw DimensionMismatchError("negative matrix power");
    Matrix acc = identity(ring_, nn);
    for (int i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero()) return false;
    return true;
}

bool Matrix::is_strictly_upper() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j <= i; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool Matrix::is_upper() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < i; ++j)
            if (!(*this)(i, j).is_zero()) return false;
    return true;
}

bool Matrix::has_sign_diagonal() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i) {
        const Scalar& d = (*this)(i, i);
        if (!d.equals_rational(Rational(1)) && !d.equals_rational(Rational(-1))) return false;
    }
    return true;
}

RatMatrix Matrix::realify() const {
    const int d = ring_dim(ring_);
    RatMatrix out(rows_ * d, cols_ * d);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Scalar& s = (*this)(i, j);
            if (s.is_zero()) continue;
            RatMatrix block = left_mul_matrix(s);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    out(i * d + a, j * d + b) = block(a, b);
        }
    return out;
}

Matrix Matrix::derealify(const RatMatrix& m, Ring ring) {
    const int d = ring_dim(ring);
    if (m.rows() % d != 0 || m.cols() % d != 0)
        throw DimensionMismatchError("realified matrix dimensions not divisible by ring dimension");
    Matrix out(ring, m.rows() / d, m.cols() / d);
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) {
            std::array<Rational, 4> comps{};
            for (int a = 0; a < d; ++a) comps[static_cast<std::size_t>(a)] = m(i * d + a, j * d);
            Scalar s = Scalar::from_components(ring, comps);
            RatMatrix expect = left_mul_matrix(s);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    if (m(i * d + a, j * d + b) != expect(a, b))
                        throw RingMismatchError("rational block is not a left-multiplication image");
            out(i, j) = s;
        }
    return out;
}

RatMatrix Matrix::coords(const Matrix& column) {
    if (column.cols() != 1) throw DimensionMismatchError("coords expects a column vector");
    const int d = ring_dim(column.ring());
    RatMatrix out(column.rows() * d, 1);
    for (int i = 0; i < column.rows(); ++i)
        for (int a = 0; a < d; ++a) out(i * d + a, 0) = column(i, 0).comp(a);
    return out;
}

Matrix Matrix::from_coords(const RatMatrix& column, Ring ring) {
    const int d = ring_dim(ring);
    if (column.cols() != 1 || column.rows() % d != 0)
        throw DimensionMismatchError("coordinate vector has wrong shape");
    Matrix out(ring, column.rows() / d, 1);
    for (int i = 0; i < out.rows(); ++i) {
        std::array<Rational, 4> comps{};
        for (int a = 0; a < d; ++a) comps[static_cast<std::size_t>(a)] = column(i * d + a, 0);
        out(i, 0) = Scalar::from_components(ring, comps);
    }
    return out;
}

NilpotentUpper::NilpotentUpper(Matrix m) : m_(std::move(m)) {
    if (!m_.is_strictly_upper())
        throw DimensionMismatchError("matrix is not strictly upper triangular");
}

bool NilpotentUpper::is_star() const {
    for (int i = 0; i + 1 < n(); ++i)
        if (m_(i, i + 1).is_zero()) return false;
    return true;
}

SignedUnipotent::SignedUnipotent(Matrix m) : m_(std::move(m)) {
    if (!m_.is_upper() || !m_.has_sign_diagonal())
        throw DimensionMismatchError("matrix is not upper triangular with +-1 diagonal");
}

SignedUnipotent SignedUnipotent::identity(Ring ring, int n) {
    return SignedUnipotent(Matrix::identity(ring, n));
}

SignedUnipotent SignedUnipotent::diagonal(Ring ring, const std::vector<int>& signs) {
    Matrix m(ring, static_cast<int>(signs.size()), static_cast<int>(signs.size()));
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] != 1 && signs[i] != -1) throw DimensionMismatchError("diagonal sign must be +-1");
        m(static_cast<int>(i), static_cast<int>(i)) = Scalar::integer(ring, signs[i]);
    }
    return SignedUnipotent(m);
}

std::vector<int> SignedUnipotent::diagonal_signs() const {
    std::vector<int> out(static_cast<std::size_t>(n()));
    for (int i = 0; i < n(); ++i)
        out[static_cast<std::size_t>(i)] = m_(i, i).equals_rational(Rational(1)) ? 1 : -1;
    return out;
}

bool SignedUnipotent::all_plus_diagonal() const {
    for (int i = 0; i < n(); ++i)
        if (!m_(i, i).is_one()) return false;
    return true;
}

bool SignedUnipotent::is_star() const {
    if (!all_plus_diagonal()) return false;
    for (int i = 0; i + 1 < n(); ++i)
        if (m_(i, i + 1).is_zero()) return false;
    return true;
}

SignedUnipotent SignedUnipotent::operator*(const SignedUnipotent& o) const {
    return SignedUnipotent(m_ * o.m_);
}

SignedUnipotent invert(const SignedUnipotent& g) {
    const Matrix& m = g.matrix();
    const int n = g.n();
    Matrix inv(g.ring(), n, n);
    for (int j = n - 1; j >= 0; --j) {
        inv(j, j) = m(j, j);  // diagonal entries are their own inverses
        for (int i = j - 1; i >= 0; --i) {
            Scalar s = Scalar::zero(g.ring());
            for (int k = i + 1; k <= j; ++k) {
                if (m(i, k).is_zero() || inv(k, j).is_zero()) continue;
                s += m(i, k) * inv(k, j);
            }
            // row i of m * inv, column j: m(i,i) inv(i,j) + s = 0
            inv(i, j) = -(m(i, i) * s);
        }
    }
    return SignedUnipotent(inv);
}

Matrix conjugate(const SignedUnipotent& g, const Matrix& x) {
    if (g.ring() != x.ring()) throw RingMismatchError("conjugate: rings differ");
    if (!x.is_square() || x.rows() != g.n()) throw DimensionMismatchError("conjugate: dimension mismatch");
    return g.matrix() * x * invert(g).matrix();
}

bool is_involution(const SignedUnipotent& g) {
    return g.matrix() * g.matrix() == Matrix::identity(g.ring(), g.n());
}

}  // namespace nilrev
