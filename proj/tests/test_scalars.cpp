#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vtl/scalars.hpp"

using vtl::BigRational;
using vtl::Polynomial;
using vtl::RationalFunction;

namespace {

const Polynomial kD = Polynomial::variable();

RationalFunction over(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}

}  // namespace

TEST_CASE("frozen coefficient values") {
    CHECK(vtl::coeff_x(0) == RationalFunction(1));
    CHECK(vtl::coeff_x(1) == RationalFunction(BigRational(1, 2)));
    CHECK(vtl::coeff_x(2) == RationalFunction(BigRational(1, 3)));
    CHECK(vtl::coeff_z(0).is_zero());
    CHECK(vtl::coeff_z(1) == RationalFunction(BigRational(1, 2)));
    CHECK(vtl::coeff_z(2) == RationalFunction(BigRational(2, 3)));
    CHECK(vtl::coeff_y(0).is_zero());
    CHECK(vtl::coeff_y(1) == over(Polynomial(-1), kD));
    CHECK(vtl::coeff_y(2) == over(Polynomial(-4), BigRational(3) * (kD + Polynomial(2))));
}

TEST_CASE("frozen alpha values") {
    CHECK(vtl::alpha(0) == RationalFunction::variable());
    CHECK(vtl::alpha(1) ==
          over((kD + Polynomial(2)) * (kD - Polynomial(1)), BigRational(2) * kD));
    CHECK(vtl::alpha(2) ==
          over(kD * (kD + Polynomial(4)), BigRational(3) * (kD + Polynomial(2))));
}

TEST_CASE("alpha is the weighted generator sum") {
    for (long i = 0; i <= 8; ++i) {
        CHECK(vtl::alpha(i) ==
              vtl::coeff_x(i) * RationalFunction::variable() + vtl::coeff_y(i) +
                  vtl::coeff_z(i));
    }
}

TEST_CASE("chebyshev ladder") {
    CHECK(vtl::chebyshev_delta(-1).is_zero());
    CHECK(vtl::chebyshev_delta(0).is_one());
    CHECK(vtl::chebyshev_delta(1) == kD);
    CHECK(vtl::chebyshev_delta(2) == Polynomial::monomial(BigRational(1), 2) - Polynomial(1));
    CHECK(vtl::chebyshev_delta(3) ==
          Polynomial::monomial(BigRational(1), 3) - BigRational(2) * kD);
    for (long i = 1; i <= 10; ++i) {
        CHECK(vtl::chebyshev_delta(i) ==
              kD * vtl::chebyshev_delta(i - 1) - vtl::chebyshev_delta(i - 2));
    }
}

TEST_CASE("chebyshev values at 5/2 close in powers of 2") {
    const BigRational two(2);
    for (long i = 0; i <= 10; ++i) {
        const BigRational want =
            (two.pow(static_cast<unsigned long>(i) + 2) -
             two.pow(static_cast<unsigned long>(i)).inverse()) /
            BigRational(3);
        CHECK(vtl::chebyshev_delta(i).eval(BigRational(5, 2)) == want);
    }
}

TEST_CASE("collapse identity and step laws") {
    for (long i = 1; i <= 12; ++i) {
        const RationalFunction lhs =
            (vtl::coeff_x(i) + vtl::coeff_y(i) * vtl::alpha(i - 1)) / -vtl::coeff_z(i);
        const RationalFunction mid =
            over(kD - Polynomial(2),
                 Polynomial::linear(BigRational(i * (2 * i - 4)), BigRational(i)));
        const RationalFunction rhs = vtl::coeff_x(i - 1) + vtl::coeff_y(i - 1);
        CHECK(lhs == mid);
        CHECK(mid == rhs);
        CHECK(vtl::coeff_z(i) * vtl::coeff_x(i - 1) == vtl::coeff_x(i));
        CHECK((vtl::coeff_y(i) + vtl::coeff_z(i)) * vtl::coeff_y(i - 1) ==
              vtl::coeff_y(i) * vtl::coeff_z(i - 1));
    }
}
