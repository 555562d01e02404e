#include "vtl/json_io.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace vtl {

namespace {

nlohmann::json coeff_strings(const Polynomial& p) {
    nlohmann::json out = nlohmann::json::array();
    for (const BigRational& c : p.coeffs()) out.push_back(c.str());
    return out;
}

Polynomial polynomial_from_strings(const nlohmann::json& j, const char* what) {
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array");
    std::vector<BigRational> coeffs;
    coeffs.reserve(j.size());
    for (const auto& entry : j) {
        coeffs.push_back(BigRational::from_string(entry.get<std::string>()));
    }
    return Polynomial(std::move(coeffs));
}

std::vector<std::uint16_t> partner_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("diagram: expected a partner array");
    std::vector<std::uint16_t> partner;
    partner.reserve(j.size());
    for (const auto& entry : j) {
        const long v = entry.get<long>();
        if (v < 0 || v >= static_cast<long>(j.size())) {
            throw std::invalid_argument("diagram: partner index out of range");
        }
        partner.push_back(static_cast<std::uint16_t>(v));
    }
    return partner;
}

}  // namespace

nlohmann::json to_json(const RationalFunction& f) {
    const auto [num, den] = f.integer_pair();
    return nlohmann::json{{"num", coeff_strings(num)}, {"den", coeff_strings(den)}};
}

RationalFunction rational_function_from_json(const nlohmann::json& j) {
    return RationalFunction(polynomial_from_strings(j.at("num"), "coefficient numerator"),
                            polynomial_from_strings(j.at("den"), "coefficient denominator"));
}

nlohmann::json to_json(const Diagram& a) {
    nlohmann::json partner = nlohmann::json::array();
    for (const std::uint16_t x : a.partner()) partner.push_back(static_cast<int>(x));
    return nlohmann::json{{"n", a.n()}, {"partner", partner}};
}

Diagram diagram_from_json(const nlohmann::json& j) {
    Diagram out(partner_from_json(j.at("partner")));
    if (out.n() != j.at("n").get<int>()) {
        throw std::invalid_argument("diagram: strand count disagrees with partner array");
    }
    return out;
}

nlohmann::json to_json(const Element& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [dg, c] : a.terms()) {
        nlohmann::json partner = nlohmann::json::array();
        for (const std::uint16_t x : dg.partner()) partner.push_back(static_cast<int>(x));
        terms.push_back(nlohmann::json{{"partner", partner}, {"coeff", to_json(c)}});
    }
    return nlohmann::json{{"n", a.n()}, {"terms", terms}};
}

Element element_from_json(const nlohmann::json& j) {
    const int n = j.at("n").get<int>();
    Element out(n);
    for (const auto& term : j.at("terms")) {
        Diagram dg(partner_from_json(term.at("partner")));
        if (dg.n() != n) {
            throw std::invalid_argument("element: term strand count disagrees");
        }
        out.add_term(dg, rational_function_from_json(term.at("coeff")));
    }
    return out;
}

nlohmann::json to_json(const NumericElement& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [dg, c] : a.terms()) {
        nlohmann::json partner = nlohmann::json::array();
        for (const std::uint16_t x : dg.partner()) partner.push_back(static_cast<int>(x));
        terms.push_back(nlohmann::json{{"partner", partner}, {"coeff", c.str()}});
    }
    return nlohmann::json{{"n", a.n()}, {"d", a.d_value().str()}, {"terms", terms}};
}

nlohmann::json to_json(const ClassTable& t) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t l = 0; l < t.coeff.size(); ++l) {
        coeffs.push_back(nlohmann::json{{"l", l}, {"coeff", to_json(t.coeff[l])}});
    }
    return nlohmann::json{{"n", t.n}, {"coeffs", coeffs}};
}

ClassTable class_table_from_json(const nlohmann::json& j) {
    ClassTable t(j.at("n").get<int>());
    for (const auto& entry : j.at("coeffs")) {
        const std::size_t l = entry.at("l").get<std::size_t>();
        if (l >= t.coeff.size()) throw std::invalid_argument("class table: class index out of range");
        t.coeff[l] = rational_function_from_json(entry.at("coeff"));
    }
    return t;
}

nlohmann::json to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const Check& c : r.checks) {
        checks.push_back(nlohmann::json{
            {"id", c.id}, {"pass", c.pass}, {"witness", c.witness}, {"note", c.note}});
    }
    nlohmann::json samples = nlohmann::json::array();
    for (const BigRational& v : r.samples) samples.push_back(v.str());
    return nlohmann::json{{"suite", r.suite},
                          {"n", r.n},
                          {"mode", r.evaluated ? "evaluated" : "exact"},
                          {"samples", samples},
                          {"seed", r.seed},
                          {"elapsed_ms", r.elapsed_ms},
                          {"all_pass", r.all_pass()},
                          {"checks", checks}};
}

}  // namespace vtl
