#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "wzsum/rational.hpp"

using namespace wzsum;

TEST_CASE("construction normalizes to lowest terms with positive denominator") {
    Rational r(6, -8);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 4);

    Rational z(0, 17);
    CHECK(z.is_zero());
    CHECK(z.numerator() == 0);
    CHECK(z.denominator() == 1);

    CHECK_THROWS_AS(Rational(1, 0), DivisionByZeroError);
}

TEST_CASE("arithmetic stays normalized") {
    Rational a(1, 6), b(1, 3);
    Rational sum = a + b; // 1/2
    CHECK(sum.numerator() == 1);
    CHECK(sum.denominator() == 2);

    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, 8) * Rational(8, 3) == Rational(1));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(7, 2) / Rational(7, 2) == Rational(1));
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZeroError);
    CHECK_THROWS_AS(Rational(0).inverse(), DivisionByZeroError);
}

TEST_CASE("ordering and strings") {
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(5).is_integer());
    CHECK(Rational(3, 8).to_string() == "3/8");
    CHECK(Rational(-27, 8).to_string() == "-27/8");
    CHECK(Rational(5).to_string() == "5");
    CHECK(Rational::from_string("-240762403481600/22876792454961")
          == Rational(Integer("-240762403481600"), Integer("22876792454961")));
    CHECK_THROWS_AS(Rational::from_string("nonsense"), InvalidParameterError);
}

TEST_CASE("pow covers negative exponents") {
    CHECK(pow(Rational(3, 2), 4) == Rational(81, 16));
    CHECK(pow(Rational(3, 2), 0) == Rational(1));
    CHECK(pow(Rational(2), -3) == Rational(1, 8));
    CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    for (int i = 0; i < 500; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        Rational c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + (-a) == Rational(0));
        if (!a.is_zero())
            CHECK(a * a.inverse() == Rational(1));
        CHECK(a.denominator() > 0);
        Integer g;
        mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
        CHECK(g == 1);
    }
}
