#pragma once

#include "vtl/element.hpp"
#include "vtl/verify.hpp"

#include "json.hpp"

namespace vtl {

// Coefficient: the coprime-integer form of the fraction, each polynomial as
// its ascending coefficient list in decimal strings, e.g. -1/d as
// {"num": ["-1"], "den": ["0", "1"]}.
nlohmann::json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const nlohmann::json& j);

// {"n": 2, "partner": [1, 0, 3, 2]} for e_1.
nlohmann::json to_json(const Diagram& a);
Diagram diagram_from_json(const nlohmann::json& j);

// {"n": ..., "terms": [{"partner": [...], "coeff": {...}}, ...]} with terms in
// the diagram order used everywhere (partner-array lexicographic).
nlohmann::json to_json(const Element& a);
Element element_from_json(const nlohmann::json& j);

// Same shape with rational coefficients as "p/q" strings and the evaluation
// point recorded under "d".
nlohmann::json to_json(const NumericElement& a);

// {"n": ..., "coeffs": [{"l": 0, "coeff": {...}}, ...]} with every class
// present, l ascending.
nlohmann::json to_json(const ClassTable& t);
ClassTable class_table_from_json(const nlohmann::json& j);

// Suite outcome; elapsed_ms is wall-clock and the only run-dependent field.
nlohmann::json to_json(const Report& r);

}  // namespace vtl
