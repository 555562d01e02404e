#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vtl/json_io.hpp"

#include "vtl/projector.hpp"

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

}  // namespace

TEST_CASE("rational function golden strings and round trips") {
    CHECK(vtl::to_json(over(Polynomial(-2), kD + Polynomial(4))).dump() ==
          R"({"den":["4","1"],"num":["-2"]})");
    CHECK(vtl::to_json(over(Polynomial(-1), kD)).dump() == R"({"den":["0","1"],"num":["-1"]})");
    CHECK(vtl::to_json(RationalFunction(BigRational(1, 2))).dump() ==
          R"({"den":["2"],"num":["1"]})");
    CHECK(vtl::to_json(RationalFunction()).dump() == R"({"den":["1"],"num":[]})");
    const RationalFunction samples[] = {
        RationalFunction(),
        RationalFunction(BigRational(-7, 3)),
        over(Polynomial(1), kD * (kD + Polynomial(2))),
        over(BigRational(1, 2) * kD + Polynomial(5), kD - Polynomial(1)),
        vtl::coeff_y(4),
        vtl::alpha(3),
    };
    for (const RationalFunction& f : samples) {
        CHECK(vtl::rational_function_from_json(vtl::to_json(f)) == f);
        CHECK(vtl::rational_function_from_json(
                  nlohmann::json::parse(vtl::to_json(f).dump())) == f);
    }
    CHECK_THROWS(vtl::rational_function_from_json(nlohmann::json{{"num", {"1"}}}));
    CHECK_THROWS(vtl::rational_function_from_json(
        nlohmann::json{{"num", {"1"}}, {"den", {"0"}}}));
}

TEST_CASE("diagram golden strings and round trips") {
    CHECK(vtl::to_json(Diagram::e(2, 1)).dump() == R"({"n":2,"partner":[1,0,3,2]})");
    CHECK(vtl::to_json(Diagram::identity(2)).dump() == R"({"n":2,"partner":[2,3,0,1]})");
    for (const Diagram& a : vtl::enumerate_diagrams(3)) {
        CHECK(vtl::diagram_from_json(vtl::to_json(a)) == a);
    }
    CHECK_THROWS(vtl::diagram_from_json(nlohmann::json{{"n", 2}, {"partner", {0, 1, 2, 3}}}));
    CHECK_THROWS(vtl::diagram_from_json(nlohmann::json{{"n", 3}, {"partner", {1, 0, 3, 2}}}));
    CHECK_THROWS(vtl::diagram_from_json(nlohmann::json{{"n", 2}}));
}

TEST_CASE("element round trips preserve every term") {
    const Element& f3 = vtl::f_recursive(3);
    const nlohmann::json j = vtl::to_json(f3);
    CHECK(j.at("n") == 3);
    CHECK(j.at("terms").size() == f3.term_count());
    CHECK(vtl::element_from_json(j) == f3);
    CHECK(vtl::element_from_json(nlohmann::json::parse(j.dump())) == f3);
    const Element zero(4);
    CHECK(vtl::element_from_json(vtl::to_json(zero)) == zero);
    nlohmann::json bad = j;
    bad["terms"][0]["partner"] = {1, 0, 3, 2};
    CHECK_THROWS(vtl::element_from_json(bad));
}

TEST_CASE("numeric element serialization") {
    const vtl::NumericElement fv = vtl::eval_at(vtl::f_recursive(2), BigRational(7, 2));
    const nlohmann::json j = vtl::to_json(fv);
    CHECK(j.at("n") == 2);
    CHECK(j.at("d") == "7/2");
    CHECK(j.at("terms").size() == 3);
    bool saw_cap = false;
    for (const auto& term : j.at("terms")) {
        if (term.at("partner") == nlohmann::json::array({1, 0, 3, 2})) {
            CHECK(term.at("coeff") == "-2/7");
            saw_cap = true;
        }
    }
    CHECK(saw_cap);
}

TEST_CASE("class table round trips") {
    const vtl::ClassTable t = vtl::f_explicit(4);
    const nlohmann::json j = vtl::to_json(t);
    CHECK(j.at("n") == 4);
    CHECK(j.at("coeffs").size() == 3);
    CHECK(j.at("coeffs")[0].at("l") == 0);
    CHECK(vtl::class_table_from_json(j) == t);
    CHECK(vtl::class_table_from_json(nlohmann::json::parse(j.dump())) == t);
    nlohmann::json bad = j;
    bad["coeffs"][1]["l"] = 7;
    CHECK_THROWS(vtl::class_table_from_json(bad));
}

TEST_CASE("report serialization shape") {
    const vtl::Report rep = vtl::check_scalar_identities(3);
    const nlohmann::json j = vtl::to_json(rep);
    CHECK(j.at("suite") == "scalars");
    CHECK(j.at("mode") == "exact");
    CHECK(j.at("all_pass") == true);
    CHECK(j.at("samples").is_array());
    CHECK(j.at("samples").empty());
    CHECK(j.at("checks").is_array());
    CHECK_FALSE(j.at("checks").empty());
    for (const auto& c : j.at("checks")) {
        CHECK(c.contains("id"));
        CHECK(c.contains("pass"));
        CHECK(c.contains("witness"));
        CHECK(c.contains("note"));
    }
    CHECK(j.contains("seed"));
    CHECK(j.contains("elapsed_ms"));
    CHECK(j.contains("n"));
}
