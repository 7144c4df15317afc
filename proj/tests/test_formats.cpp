#include <doctest.h>

#include "nilrev/certificate_io.hpp"
#include "nilrev/errors.hpp"
#include "nilrev/random_gen.hpp"
#include "nilrev/reverser.hpp"
#include "nilrev/text_format.hpp"

using namespace nilrev;

namespace {
const Ring kRings[] = {Ring::Rat, Ring::Gauss, Ring::Quat};
}

TEST_CASE("matrix text round trips") {
    for (Ring ring : kRings) {
        Rng rng(1515);
        for (int t = 0; t < 40; ++t) {
            const int n = 1 + static_cast<int>(rng.below(5));
            Matrix m(ring, n, n);
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) m(r, c) = random_scalar(ring, rng);
            CHECK(parse_matrix_text(matrix_to_text(m), ring) == m);
            const MatrixFile f = parse_matrix_file(matrix_to_file_text(m));
            CHECK(f.ring == ring);
            CHECK(f.n == n);
            CHECK(f.m == m);
        }
    }
    CHECK(matrix_to_text(Matrix::unit(Ring::Rat, 2, 0, 1)) == "0,1;0,0");
    CHECK(parse_matrix_text(" 0 , 1 ; 0 , 0 \n", Ring::Rat) == Matrix::unit(Ring::Rat, 2, 0, 1));
}

TEST_CASE("matrix parse errors carry 1-based positions") {
    try {
        parse_matrix_text("0,1;0", Ring::Rat);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
    try {
        parse_matrix_text("0,x;0,0", Ring::Rat);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column == 2);
    }
    CHECK_THROWS_AS(parse_matrix_text("", Ring::Rat), ParseError);
    CHECK_THROWS_AS(parse_matrix_file("n=2\n0,1;0,0"), ParseError);          // missing ring
    CHECK_THROWS_AS(parse_matrix_file("ring=rat n=3\n0,1;0,0"), ParseError); // n mismatch
}

TEST_CASE("certificate documents round trip") {
    for (Ring ring : kRings) {
        Rng rng(1616);
        for (int t = 0; t < 15; ++t) {
            const int n = 2 + static_cast<int>(rng.below(4));
            const NilpotentUpper x = random_nilpotent(ring, n, rng, {.star = true});
            CertificateDocument doc{reverse_star(x), false, 7777};
            doc.verified = check_certificate(doc.cert);
            const std::string text = certificate_to_json(doc);
            const CertificateDocument back = certificate_from_json(text);
            CHECK(documents_equal(doc, back));
            CHECK(certificate_to_json(back) == text);  // canonical serialization
        }
    }
}

TEST_CASE("certificate json is schema checked") {
    const CertificateDocument doc{reverse_star(NilpotentUpper(Matrix::unit(Ring::Rat, 2, 0, 1))),
                                  true, std::nullopt};
    const std::string good = certificate_to_json(doc);
    CHECK(good.find("\"schema_version\": \"1\"") != std::string::npos);

    CHECK_THROWS_AS(certificate_from_json("not json at all"), MalformedCertificateError);
    CHECK_THROWS_AS(certificate_from_json("{}"), MalformedCertificateError);
    CHECK_THROWS_AS(certificate_from_json("[1,2,3]"), MalformedCertificateError);

    // version bump is rejected
    std::string bumped = good;
    const auto pos = bumped.find("\"1\"");
    bumped.replace(pos, 3, "\"2\"");
    CHECK_THROWS_AS(certificate_from_json(bumped), MalformedCertificateError);

    // wrong type inside a field
    std::string broken = good;
    const auto npos_ = broken.find("\"n\": 2");
    REQUIRE(npos_ != std::string::npos);
    broken.replace(npos_, 6, "\"n\": \"two\"");
    CHECK_THROWS_AS(certificate_from_json(broken), MalformedCertificateError);

    // matrix body inconsistent with n
    std::string shrunk = good;
    const auto gpos = shrunk.find("0,1;0,0");
    REQUIRE(gpos != std::string::npos);
    shrunk.replace(gpos, 7, "0");
    CHECK_THROWS_AS(certificate_from_json(shrunk), MalformedCertificateError);
}

TEST_CASE("documents_equal distinguishes fields") {
    const CertificateDocument a{reverse_star(NilpotentUpper(Matrix::unit(Ring::Rat, 2, 0, 1))),
                                true, std::nullopt};
    CertificateDocument b = a;
    CHECK(documents_equal(a, b));
    b.seed = 1;
    CHECK_FALSE(documents_equal(a, b));
    b = a;
    b.verified = false;
    CHECK_FALSE(documents_equal(a, b));
}
