#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vtl/rational.hpp"

using vtl::BigRational;

TEST_CASE("construction normalizes sign and gcd") {
    CHECK(BigRational(2, 4) == BigRational(1, 2));
    CHECK(BigRational(-2, 4) == BigRational(1, -2));
    CHECK(BigRational(1, -2).str() == "-1/2");
    CHECK(BigRational(0, 7) == BigRational(0));
    CHECK(BigRational(mpz_class(6), mpz_class(-9)).str() == "-2/3");
}

TEST_CASE("field arithmetic on frozen instances") {
    const BigRational half(1, 2);
    const BigRational third(1, 3);
    CHECK(half + third == BigRational(5, 6));
    CHECK(half - BigRational(3, 4) == BigRational(-1, 4));
    CHECK(half * BigRational(2, 3) == third);
    CHECK(half / third == BigRational(3, 2));
    CHECK(-half == BigRational(-1, 2));
    CHECK(half.inverse() == BigRational(2));
    CHECK(BigRational(-7, 3).abs() == BigRational(7, 3));
}

TEST_CASE("pow") {
    CHECK(BigRational(2, 3).pow(3) == BigRational(8, 27));
    CHECK(BigRational(-1, 2).pow(2) == BigRational(1, 4));
    CHECK(BigRational(5, 9).pow(0) == BigRational(1));
}

TEST_CASE("string round trips") {
    CHECK(BigRational::from_string("5") == BigRational(5));
    CHECK(BigRational::from_string("-7/3") == BigRational(-7, 3));
    CHECK(BigRational::from_string("4/6") == BigRational(2, 3));
    const BigRational q(-22, 7);
    CHECK(BigRational::from_string(q.str()) == q);
    CHECK(BigRational(3).str() == "3");
}

TEST_CASE("predicates and order") {
    CHECK(BigRational().is_zero());
    CHECK_FALSE(BigRational(1, 3).is_zero());
    CHECK(BigRational(4, 2).is_integer());
    CHECK_FALSE(BigRational(1, 2).is_integer());
    CHECK(BigRational(-3).sign() == -1);
    CHECK(BigRational(0).sign() == 0);
    CHECK(BigRational(2, 5).sign() == 1);
    CHECK(BigRational(1, 3) < BigRational(1, 2));
    CHECK(BigRational(-1, 2) <= BigRational(-1, 2));
    CHECK(BigRational(5, 7) != BigRational(5, 8));
}

TEST_CASE("factorial and binomial") {
    CHECK(vtl::factorial(0) == 1);
    CHECK(vtl::factorial(1) == 1);
    CHECK(vtl::factorial(5) == 120);
    CHECK(vtl::factorial(10) == 3628800);
    CHECK(vtl::binomial(5, 2) == 10);
    CHECK(vtl::binomial(10, 5) == 252);
    CHECK(vtl::binomial(4, 0) == 1);
    CHECK(vtl::binomial(4, 4) == 1);
    CHECK(vtl::binomial(12, 6) == 924);
}

TEST_CASE("odd double factorial") {
    CHECK(vtl::odd_double_factorial(-1) == 1);
    CHECK(vtl::odd_double_factorial(0) == 1);
    CHECK(vtl::odd_double_factorial(1) == 1);
    CHECK(vtl::odd_double_factorial(3) == 3);
    CHECK(vtl::odd_double_factorial(5) == 15);
    CHECK(vtl::odd_double_factorial(7) == 105);
    CHECK(vtl::odd_double_factorial(15) == 2027025);
}
