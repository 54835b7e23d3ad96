#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcy/field.hpp"
#include "qcy/polyk.hpp"

#include <random>

using namespace qcy;

namespace {

FieldScalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    FieldScalar r;
    for (auto& q : r.c) q = Rational(num(rng), den(rng));
    return r;
}

} // namespace

TEST_CASE("defining relations") {
    CHECK(FieldScalar::sqrt2() * FieldScalar::sqrt2() == FieldScalar::integer(2));
    CHECK(FieldScalar::i() * FieldScalar::i() == -FieldScalar::one());

    // ((1+i)/sqrt2)^2 = i
    FieldScalar z = (FieldScalar::one() + FieldScalar::i()) * FieldScalar::sqrt2().inverse();
    CHECK(z * z == FieldScalar::i());
}

TEST_CASE("inverses") {
    CHECK(FieldScalar::sqrt2().inverse() ==
          FieldScalar(Rational(0), Rational(1, 2), Rational(0), Rational(0)));
    CHECK(FieldScalar::i().inverse() == -FieldScalar::i());

    FieldScalar a = FieldScalar::one() + FieldScalar::sqrt2();
    CHECK(a.inverse() == -FieldScalar::one() + FieldScalar::sqrt2());

    CHECK_THROWS(FieldScalar::zero().inverse());
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(20110831);
    for (int trial = 0; trial < 200; ++trial) {
        FieldScalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == FieldScalar::one());
            CHECK(a.inverse().inverse() == a);
        }
    }
}

TEST_CASE("embedding is a ring homomorphism to double accuracy") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        FieldScalar a = random_scalar(rng), b = random_scalar(rng);
        auto lhs = (a * b).embed();
        auto rhs = a.embed() * b.embed();
        CHECK(std::abs(lhs - rhs) < 1e-9);
    }
    CHECK(std::abs(complex_embedding(FieldScalar::sqrt2(), 40) -
                   std::complex<double>(1.41421356237309, 0)) < 1e-12);
    CHECK(std::abs(complex_embedding(FieldScalar::i() * FieldScalar::sqrt2(), 40) -
                   std::complex<double>(0, 1.41421356237309)) < 1e-12);
    CHECK(complex_embedding(FieldScalar::zero(), 40) == std::complex<double>(0, 0));
}

TEST_CASE("serialization round trip") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        FieldScalar a = random_scalar(rng);
        CHECK(FieldScalar::parse(a.str()) == a);
    }
    CHECK(FieldScalar::sqrt2().str() == "0/1 1/1 0/1 0/1");
}

TEST_CASE("total order is total and consistent") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        FieldScalar a = random_scalar(rng), b = random_scalar(rng);
        int ab = a.compare(b), ba = b.compare(a);
        CHECK(ab == -ba);
        if (ab == 0) CHECK(a == b);
    }
}

TEST_CASE("polynomial gcd over the field") {
    // (x^2 - 2)(x - i) vs (x^2 - 2)(x + 1)
    PolyK f = PolyK::binomial(2, FieldScalar::integer(2));
    PolyK a = f * (PolyK::x_pow(1) - PolyK(FieldScalar::i()));
    PolyK b = f * (PolyK::x_pow(1) + PolyK(FieldScalar::one()));
    CHECK(poly_gcd(a, b) == f.monic());

    PolyK sq = f * f * (PolyK::x_pow(1) + PolyK(FieldScalar::one()));
    PolyK sf = poly_squarefree_part(sq);
    CHECK(sf.degree() == 3);
    CHECK(poly_rem(sf, f).is_zero());
}
