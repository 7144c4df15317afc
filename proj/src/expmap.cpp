#include "nilrev/expmap.hpp"

#include "nilrev/errors.hpp"

namespace nilrev {

SignedUnipotent exp_nilpotent(const NilpotentUpper& x) {
    const Matrix& m = x.matrix();
    const int n = x.n();
    Matrix acc = Matrix::identity(x.ring(), n);
    Matrix power = Matrix::identity(x.ring(), n);
    Rational factorial(1);
    for (int k = 1; k <= n - 1; ++k) {
        power = power * m;
        if (power.is_zero()) break;
        factorial *= Rational(k);
        acc = acc + power.scaled(factorial.inverse());
    }
    return SignedUnipotent(std::move(acc));
}

NilpotentUpper log_unipotent(const SignedUnipotent& u) {
    if (!u.all_plus_diagonal())
        throw NotUnipotentError("log requires an all-plus diagonal");
    const int n = u.n();
    Matrix nil = Matrix::identity(u.ring(), n) - u.matrix();  // (Id-u)^n = 0
    Matrix acc(u.ring(), n, n);
    Matrix power = Matrix::identity(u.ring(), n);
    for (int k = 1; k <= n - 1; ++k) {
        power = power * nil;
        if (power.is_zero()) break;
        acc = acc - power.scaled(Rational(1, k));
    }
    return NilpotentUpper(std::move(acc));
}

}  // namespace nilrev
