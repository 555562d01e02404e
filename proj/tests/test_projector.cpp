#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vtl/projector.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

using vtl::BigRational;
using vtl::Diagram;
using vtl::Element;
using vtl::Polynomial;
using vtl::RationalFunction;

namespace {

RationalFunction over(const Polynomial& num, const Polynomial& den) {
    return RationalFunction(num, den);
}

const Polynomial kD = Polynomial::variable();

Diagram chain(std::initializer_list<Diagram> letters) {
    auto it = letters.begin();
    Diagram acc = *it++;
    for (; it != letters.end(); ++it) {
        const auto r = compose(acc, *it);
        REQUIRE(r.loops == 0);
        acc = r.diagram;
    }
    return acc;
}

}  // namespace

TEST_CASE("classical planar projector examples") {
    CHECK(vtl::jones_wenzl(1) == Element::from_diagram(Diagram::identity(1)));
    const Element p2 = Element::from_diagram(Diagram::identity(2)) -
                       over(Polynomial(1), kD) * Element::from_diagram(Diagram::e(2, 1));
    CHECK(vtl::jones_wenzl(2) == p2);
    for (int n = 2; n <= 4; ++n) {
        const Element& p = vtl::jones_wenzl(n);
        CHECK(p * p == p);
        for (int i = 1; i < n; ++i) {
            CHECK((p * Element::from_diagram(Diagram::e(n, i))).is_zero());
            CHECK((Element::from_diagram(Diagram::e(n, i)) * p).is_zero());
        }
        for (const auto& [dg, c] : p.terms()) CHECK(dg.is_planar());
    }
    CHECK_THROWS_AS(vtl::jones_wenzl(0), std::domain_error);
}

TEST_CASE("two-strand projector in closed form") {
    Element want(2);
    want.add_term(Diagram::identity(2), RationalFunction(BigRational(1, 2)));
    want.add_term(Diagram::v(2, 1), RationalFunction(BigRational(1, 2)));
    want.add_term(Diagram::e(2, 1), over(Polynomial(-1), kD));
    CHECK(vtl::f_recursive(2) == want);
    CHECK(vtl::f_kernel(2) == want);
    CHECK(vtl::f_simplified(2) == want);
    CHECK(vtl::f_recursive(1) == Element::from_diagram(Diagram::identity(1)));
    CHECK_THROWS_AS(vtl::f_kernel(1), std::domain_error);
}

TEST_CASE("kernel factor at three strands, term by term") {
    const Element& k3 = vtl::f_kernel(3);
    CHECK(k3.term_count() == 7);
    CHECK(k3.coeff(Diagram::identity(3)) == vtl::coeff_x(2));
    CHECK(k3.coeff(Diagram::e(3, 2)) == vtl::coeff_x(1) * vtl::coeff_y(2));
    CHECK(k3.coeff(Diagram::v(3, 2)) == vtl::coeff_x(1) * vtl::coeff_z(2));
    CHECK(k3.coeff(chain({Diagram::e(3, 2), Diagram::e(3, 1)})) ==
          vtl::coeff_y(2) * vtl::coeff_y(1));
    CHECK(k3.coeff(chain({Diagram::e(3, 2), Diagram::v(3, 1)})) ==
          vtl::coeff_y(2) * vtl::coeff_z(1));
    CHECK(k3.coeff(chain({Diagram::v(3, 2), Diagram::e(3, 1)})) ==
          vtl::coeff_z(2) * vtl::coeff_y(1));
    CHECK(k3.coeff(chain({Diagram::v(3, 2), Diagram::v(3, 1)})) ==
          vtl::coeff_z(2) * vtl::coeff_z(1));
}

TEST_CASE("constructions agree through five strands") {
    for (int n = 2; n <= 5; ++n) {
        const Element& fr = vtl::f_recursive(n);
        CHECK(fr * fr == fr);
        CHECK(vtl::f_simplified(n) == fr);
        CHECK(vtl::class_expand(vtl::f_explicit(n)) == fr);
    }
}

TEST_CASE("chain set") {
    for (int n = 2; n <= 6; ++n) {
        const std::vector<Diagram> support = vtl::kernel_support(n);
        CHECK(support.size() == (std::size_t{1} << n) - 1);
        CHECK(support.front() == Diagram::identity(n));
        std::vector<Diagram> sorted = support;
        std::sort(sorted.begin(), sorted.end());
        CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
    const std::vector<Diagram> s3 = vtl::kernel_support(3);
    const std::vector<Diagram> want = {
        Diagram::identity(3),
        Diagram::e(3, 2),
        Diagram::v(3, 2),
        chain({Diagram::e(3, 2), Diagram::e(3, 1)}),
        chain({Diagram::e(3, 2), Diagram::v(3, 1)}),
        chain({Diagram::v(3, 2), Diagram::e(3, 1)}),
        chain({Diagram::v(3, 2), Diagram::v(3, 1)}),
    };
    CHECK(s3 == want);
    CHECK(vtl::kernel_support(8).size() == 255);
}

TEST_CASE("u sets") {
    CHECK(vtl::u_set(2, 2) == std::vector<Diagram>{Diagram::e(3, 2)});
    const std::vector<Diagram> u21 = {
        chain({Diagram::e(3, 2), Diagram::e(3, 1)}),
        chain({Diagram::v(3, 2), Diagram::e(3, 1)}),
    };
    CHECK(vtl::u_set(2, 1) == u21);
    for (int n = 2; n <= 5; ++n) {
        for (int i = 1; i <= n; ++i) {
            const std::vector<Diagram> u = vtl::u_set(n, i);
            CHECK(u.size() == std::size_t{1} << (n - i));
            for (const Diagram& y : u) {
                CHECK(y.n() == n + 1);
                CHECK(y.through_strands() == n - 1);
            }
        }
    }
    CHECK_THROWS_AS(vtl::u_set(3, 0), std::domain_error);
    CHECK_THROWS_AS(vtl::u_set(3, 4), std::domain_error);
}

TEST_CASE("closed-form class coefficients") {
    CHECK(vtl::coeff_explicit(2, 0) == RationalFunction(BigRational(1, 2)));
    CHECK(vtl::coeff_explicit(2, 1) == over(Polynomial(-1), kD));
    CHECK(vtl::coeff_explicit(3, 1) ==
          over(Polynomial(-2), BigRational(6) * (kD + Polynomial(2))));
    CHECK(vtl::coeff_explicit(4, 1) ==
          over(Polynomial(-2), BigRational(24) * (kD + Polynomial(4))));
    CHECK(vtl::coeff_explicit(4, 2) ==
          over(Polynomial(1), BigRational(3) * (kD + Polynomial(2)) * (kD + Polynomial(4))));
    for (int n = 1; n <= 8; ++n) {
        CHECK(vtl::coeff_explicit(n, 0) ==
              RationalFunction(BigRational(mpz_class(1), vtl::factorial(static_cast<unsigned long>(n)))));
    }
    CHECK_THROWS_AS(vtl::coeff_explicit(3, 2), std::domain_error);
    const vtl::ClassTable t4 = vtl::f_explicit(4);
    CHECK(t4.n == 4);
    REQUIRE(t4.coeff.size() == 3);
    for (int l = 0; l <= 2; ++l) CHECK(t4.coeff[static_cast<std::size_t>(l)] == vtl::coeff_explicit(4, l));
}

TEST_CASE("step recursion for class coefficients") {
    for (int n = 1; n <= 8; ++n) {
        for (int k = n % 2; k <= n; k += 2) {
            CHECK(vtl::coeff_ce_recursive(n, k) == vtl::coeff_explicit(n, (n - k) / 2));
        }
    }
    CHECK(vtl::coeff_ce_recursive(2, 0) == over(Polynomial(-1), kD));
    CHECK_THROWS_AS(vtl::coeff_ce_recursive(3, 2), std::domain_error);
}

TEST_CASE("trace closed forms") {
    CHECK(vtl::trace_closed_form(1, vtl::TraceVariant::d_power) == RationalFunction::variable());
    CHECK(vtl::trace_closed_form(1, vtl::TraceVariant::alpha_product) ==
          RationalFunction::variable());
    CHECK(vtl::trace_closed_form(2, vtl::TraceVariant::alpha_product) ==
          over((kD + Polynomial(2)) * (kD - Polynomial(1)), Polynomial(2)));
    CHECK(vtl::trace_closed_form(2, vtl::TraceVariant::d_power) ==
          over(kD * (kD + Polynomial(2)) * (kD - Polynomial(1)), Polynomial(2)));
    for (int n = 2; n <= 6; ++n) {
        const RationalFunction ratio = vtl::trace_closed_form(n, vtl::TraceVariant::d_power) /
                                       vtl::trace_closed_form(n, vtl::TraceVariant::alpha_product);
        CHECK(ratio == RationalFunction(Polynomial::monomial(BigRational(1), static_cast<std::size_t>(n - 1))));
    }
}
