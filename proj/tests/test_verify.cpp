#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vtl/verify.hpp"

#include <algorithm>
#include <string>

using vtl::BigRational;
using vtl::Report;

namespace {

void require_clean(const Report& rep, const std::string& suite, int n) {
    INFO(vtl::report_text(rep));
    CHECK(rep.suite == suite);
    CHECK(rep.n == n);
    CHECK(rep.all_pass());
    CHECK_FALSE(rep.checks.empty());
    for (const vtl::Check& c : rep.checks) {
        CHECK_FALSE(c.id.empty());
        CHECK(c.witness.empty());
    }
}

}  // namespace

TEST_CASE("all suites pass at small strand counts") {
    require_clean(vtl::check_relations(3), "relations", 3);
    require_clean(vtl::check_characterization(3, vtl::f_recursive(3)), "characterization", 3);
    require_clean(vtl::check_class_invariance(3), "class_invariance", 3);
    require_clean(vtl::check_structural_lemmas(3), "structural", 3);
    require_clean(vtl::check_trace(2), "trace", 2);
    require_clean(vtl::check_dimensions(4), "dimensions", 4);
    require_clean(vtl::check_kernel_support(4), "kernel_support", 4);
    require_clean(vtl::check_scalar_identities(6), "scalars", 6);
    require_clean(vtl::check_projector_properties(3), "projector_properties", 3);
    require_clean(vtl::check_jones_wenzl(3), "jones_wenzl", 3);
    require_clean(vtl::check_coefficient_laws(6), "coefficient_laws", 6);
    require_clean(vtl::check_construction_agreement(3), "agreement", 3);
}

TEST_CASE("exact mode leaves no sampling trail") {
    const Report rep = vtl::check_characterization(4, vtl::f_recursive(4));
    CHECK_FALSE(rep.evaluated);
    CHECK(rep.samples.empty());
}

TEST_CASE("a wrong candidate fails with a witness") {
    const vtl::Element one = vtl::Element::from_diagram(vtl::Diagram::identity(2));
    const Report rep = vtl::check_characterization(2, one);
    CHECK_FALSE(rep.all_pass());
    bool caps_failed = false, crossings_failed = false;
    for (const vtl::Check& c : rep.checks) {
        if (c.id == "projector.idempotent") CHECK(c.pass);
        if (!c.pass) {
            CHECK_FALSE(c.witness.empty());
            caps_failed = caps_failed || c.id == "projector.kills_caps";
            crossings_failed = crossings_failed || c.id == "projector.fixed_by_crossings";
        }
    }
    CHECK(caps_failed);
    CHECK(crossings_failed);
    const std::string text = vtl::report_text(rep);
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("witness") != std::string::npos);
}

TEST_CASE("sample points are deterministic, distinct, admissible") {
    const auto a = vtl::sample_points(5, vtl::kDefaultSeed);
    const auto b = vtl::sample_points(5, vtl::kDefaultSeed);
    CHECK(a == b);
    CHECK(a.size() == 5);
    for (const BigRational& v : a) CHECK(BigRational(2) < v);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) CHECK(a[i] != a[j]);
    }
    const auto c = vtl::sample_points(5, vtl::kDefaultSeed + 1);
    CHECK(a != c);
}

TEST_CASE("trace adjudication is recorded, not assumed") {
    const Report rep = vtl::check_trace(3);
    CHECK(rep.all_pass());
    const auto match = std::find_if(rep.checks.begin(), rep.checks.end(), [](const vtl::Check& c) {
        return c.id == "trace.variant_match";
    });
    REQUIRE(match != rep.checks.end());
    CHECK(match->note.find("alpha_product") != std::string::npos);
    CHECK(match->note.find("d_power") != std::string::npos);
}

TEST_CASE("report bookkeeping") {
    Report rep;
    rep.suite = "adhoc";
    CHECK(rep.all_pass());
    vtl::Check good{"a", true, "", ""};
    vtl::Check bad{"b", false, "w", ""};
    rep.checks = {good, bad};
    CHECK_FALSE(rep.all_pass());
    rep.checks = {good};
    CHECK(rep.all_pass());
    const std::string text = vtl::report_text(vtl::check_scalar_identities(3));
    CHECK(text.find("scalars") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}
