#include <doctest.h>

#include "nilrev/errors.hpp"
#include "nilrev/random_gen.hpp"
#include "nilrev/scalar.hpp"

using namespace nilrev;

namespace {

const Ring kRings[] = {Ring::Rat, Ring::Gauss, Ring::Quat};

Scalar q(long a, long b, long c, long d) {
    return Scalar::quat(Rational(a), Rational(b), Rational(c), Rational(d));
}

RatMatrix scalar_coords(const Scalar& s) {
    Matrix m(s.ring(), 1, 1);
    m(0, 0) = s;
    return Matrix::coords(m);
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(3, 6) == Rational(1, 2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 5) == Rational());
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(-6, 3).str() == "-2");
    CHECK_THROWS_AS(Rational(1, 0), ZeroInverseError);
    CHECK(Rational::from_string("-3/9") == Rational(-1, 3));
    CHECK(Rational(5, 7).inverse() == Rational(7, 5));
    CHECK_THROWS_AS(Rational().inverse(), ZeroInverseError);
}

TEST_CASE("quaternion multiplication table") {
    const Scalar i = q(0, 1, 0, 0), j = q(0, 0, 1, 0), k = q(0, 0, 0, 1);
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * j == -i);
    CHECK(k * i == j);
    CHECK(i * k == -j);
    CHECK(i * i == q(-1, 0, 0, 0));
    CHECK(j * j == q(-1, 0, 0, 0));
    CHECK(k * k == q(-1, 0, 0, 0));
    CHECK(i * j != j * i);  // the ring really is noncommutative
}

TEST_CASE("gaussian arithmetic") {
    const Scalar one_plus_i = Scalar::gauss(Rational(1), Rational(1));
    const Scalar one_minus_i = Scalar::gauss(Rational(1), Rational(-1));
    CHECK(one_plus_i * one_minus_i == Scalar::integer(Ring::Gauss, 2));
    CHECK(one_plus_i.conj() == one_minus_i);
    CHECK(one_plus_i.inverse() == Scalar::gauss(Rational(1, 2), Rational(-1, 2)));
}

TEST_CASE("quaternion inverse") {
    const Scalar x = q(1, 1, 1, 1);
    CHECK(x.inverse() == Scalar::quat(Rational(1, 4), Rational(-1, 4), Rational(-1, 4), Rational(-1, 4)));
    CHECK(x * x.inverse() == Scalar::one(Ring::Quat));
    CHECK(x.inverse() * x == Scalar::one(Ring::Quat));
    CHECK_THROWS_AS(Scalar::zero(Ring::Quat).inverse(), ZeroInverseError);
}

TEST_CASE("division ring axioms on random values") {
    for (Ring ring : kRings) {
        Rng rng(101);
        for (int t = 0; t < 300; ++t) {
            const Scalar x = random_scalar(ring, rng);
            const Scalar y = random_scalar(ring, rng);
            const Scalar z = random_scalar(ring, rng);
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK((x + y) * z == x * z + y * z);
            CHECK((x * y).conj() == y.conj() * x.conj());
            CHECK((x * y).norm() == x.norm() * y.norm());
            if (ring != Ring::Quat) CHECK(x * y == y * x);
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == Scalar::one(ring));
                CHECK(x.inverse() * x == Scalar::one(ring));
            }
        }
    }
}

TEST_CASE("realification is a homomorphism on the correct side") {
    const Scalar i = q(0, 1, 0, 0), j = q(0, 0, 1, 0), k = q(0, 0, 0, 1);
    CHECK(left_mul_matrix(i) * scalar_coords(j) == scalar_coords(k));
    CHECK(right_mul_matrix(i) * scalar_coords(j) == scalar_coords(-k));
    for (Ring ring : kRings) {
        Rng rng(202);
        for (int t = 0; t < 100; ++t) {
            const Scalar x = random_scalar(ring, rng);
            const Scalar y = random_scalar(ring, rng);
            CHECK(left_mul_matrix(x * y) == left_mul_matrix(x) * left_mul_matrix(y));
            CHECK(right_mul_matrix(x * y) == right_mul_matrix(y) * right_mul_matrix(x));
            CHECK(left_mul_matrix(x) * scalar_coords(y) == scalar_coords(x * y));
            CHECK(right_mul_matrix(x) * scalar_coords(y) == scalar_coords(y * x));
        }
    }
}

TEST_CASE("scalar text round trips") {
    for (Ring ring : kRings) {
        Rng rng(303);
        for (int t = 0; t < 200; ++t) {
            const Scalar x = random_scalar(ring, rng);
            CHECK(parse_scalar(x.str(), ring) == x);
        }
    }
    CHECK(parse_scalar("1/2-3i+k", Ring::Quat) ==
          Scalar::quat(Rational(1, 2), Rational(-3), Rational(0), Rational(1)));
    CHECK(parse_scalar("-i", Ring::Gauss) == Scalar::gauss(Rational(0), Rational(-1)));
    CHECK(parse_scalar(" 2 ", Ring::Rat) == Scalar::integer(Ring::Rat, 2));
    CHECK(parse_scalar("0", Ring::Quat).is_zero());
    CHECK(q(0, -3, 0, 0).str() == "-3i");
    CHECK(q(1, 0, 0, 1).str() == "1+k");
    CHECK(Scalar::zero(Ring::Quat).str() == "0");
}

TEST_CASE("scalar parse errors carry positions") {
    CHECK_THROWS_AS(parse_scalar("1+", Ring::Gauss), ParseError);
    CHECK_THROWS_AS(parse_scalar("x", Ring::Rat), ParseError);
    CHECK_THROWS_AS(parse_scalar("", Ring::Rat), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0", Ring::Rat), ParseError);  // rejected at parse time
    // units outside the ring are rejected
    CHECK_THROWS_AS(parse_scalar("j", Ring::Gauss), ParseError);
    CHECK_THROWS_AS(parse_scalar("i", Ring::Rat), ParseError);
    try {
        parse_scalar("1+?", Ring::Gauss);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.column > 0);
    }
}

TEST_CASE("ring names") {
    CHECK(ring_from_name("rat") == Ring::Rat);
    CHECK(ring_from_name("gauss") == Ring::Gauss);
    CHECK(ring_from_name("quat") == Ring::Quat);
    CHECK_THROWS_AS(ring_from_name("real"), ParseError);
    for (Ring ring : kRings) CHECK(ring_from_name(ring_name(ring)) == ring);
}
