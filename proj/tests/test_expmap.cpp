#include <doctest.h>

#include "nilrev/errors.hpp"
#include "nilrev/expmap.hpp"
#include "nilrev/random_gen.hpp"
#include "nilrev/text_format.hpp"

using namespace nilrev;

namespace {
const Ring kRings[] = {Ring::Rat, Ring::Gauss, Ring::Quat};
}

TEST_CASE("exp of zero is the identity") {
    for (Ring ring : kRings)
        CHECK(exp_nilpotent(NilpotentUpper(Matrix(ring, 3, 3))).matrix() == Matrix::identity(ring, 3));
}

TEST_CASE("exp of the 3x3 regular element") {
    const Matrix x = Matrix::unit(Ring::Rat, 3, 0, 1) + Matrix::unit(Ring::Rat, 3, 1, 2);
    const SignedUnipotent u = exp_nilpotent(NilpotentUpper(x));
    CHECK(u.matrix() == parse_matrix_text("1,1,1/2;0,1,1;0,0,1", Ring::Rat));
    CHECK(log_unipotent(u).matrix() == x);
}

TEST_CASE("exp collects noncommutative cross terms") {
    // X = i E12 + j E23 over the quaternions: (exp X)_{13} = ij/2 = k/2.
    Matrix x(Ring::Quat, 3, 3);
    x(0, 1) = Scalar::quat(Rational(0), Rational(1), Rational(0), Rational(0));
    x(1, 2) = Scalar::quat(Rational(0), Rational(0), Rational(1), Rational(0));
    const SignedUnipotent u = exp_nilpotent(NilpotentUpper(x));
    CHECK(u.matrix()(0, 2) == Scalar::quat(Rational(0), Rational(0), Rational(0), Rational(1, 2)));
    CHECK(u.matrix()(0, 1) == x(0, 1));
    CHECK(u.matrix()(1, 2) == x(1, 2));
}

TEST_CASE("exp and log are mutually inverse") {
    for (Ring ring : kRings) {
        Rng rng(111);
        for (int t = 0; t < 50; ++t) {
            const int n = 1 + static_cast<int>(rng.below(8));
            const NilpotentUpper x = random_nilpotent(ring, n, rng);
            CHECK(log_unipotent(exp_nilpotent(x)) == x);
        }
        for (int t = 0; t < 50; ++t) {
            const int n = 2 + static_cast<int>(rng.below(7));
            SignedUnipotent u = random_signed_unipotent(ring, n, rng);
            // force the all-plus diagonal so log applies
            Matrix m = u.matrix();
            for (int i = 0; i < n; ++i) m(i, i) = Scalar::one(ring);
            const SignedUnipotent v(m);
            CHECK(exp_nilpotent(log_unipotent(v)) == v);
        }
    }
}

TEST_CASE("exp preserves the star condition both ways") {
    for (Ring ring : kRings) {
        Rng rng(222);
        for (int t = 0; t < 40; ++t) {
            const int n = 2 + static_cast<int>(rng.below(6));
            const NilpotentUpper x = random_nilpotent(ring, n, rng, {.star = true});
            const SignedUnipotent u = exp_nilpotent(x);
            CHECK(u.is_star());
            // superdiagonals agree entry by entry
            for (int i = 0; i + 1 < n; ++i) CHECK(u.matrix()(i, i + 1) == x.matrix()(i, i + 1));
            const NilpotentUpper nonstar = random_nilpotent(ring, n, rng);
            CHECK(exp_nilpotent(nonstar).is_star() == nonstar.is_star());
        }
    }
}

TEST_CASE("exp is equivariant under conjugation") {
    for (Ring ring : kRings) {
        Rng rng(333);
        for (int t = 0; t < 25; ++t) {
            const int n = 2 + static_cast<int>(rng.below(5));
            const NilpotentUpper x = random_nilpotent(ring, n, rng);
            const SignedUnipotent g = random_signed_unipotent(ring, n, rng);
            const NilpotentUpper gxg(conjugate(g, x.matrix()));
            CHECK(exp_nilpotent(gxg).matrix() == conjugate(g, exp_nilpotent(x).matrix()));
        }
    }
}

TEST_CASE("log rejects signed diagonals") {
    const SignedUnipotent d = SignedUnipotent::diagonal(Ring::Rat, {1, -1});
    CHECK_THROWS_AS(log_unipotent(d), NotUnipotentError);
}
