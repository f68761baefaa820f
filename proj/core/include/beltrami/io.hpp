#pragma once

#include <string>
#include <vector>

#include "beltrami/construct.hpp"
#include "beltrami/dynamics.hpp"
#include "beltrami/ratfunc.hpp"

namespace beltrami {

// All emitters return finished JSON/CSV text with a deterministic byte layout:
// exact coefficients as canonical strings, map iteration in canonical key
// order, doubles in shortest round-trip form (%.17g for CSV).

std::string scalar_string(const Rational& v);
std::string scalar_string(const GoldenNumber& v);
std::string scalar_string(const RootThreeNumber& v);

// Group elements / line sets as arrays of 3-arrays (matrices row-major).
std::string group_json(const MatrixGroup& g);
std::string line_set_json(const std::vector<Vec3G>& lines);

// Polynomials as {"e0,e1,...": "coefficient"} exponent-coefficient maps.
std::string polynomial_json(const Polynomial<Rational>& p);
std::string polynomial_json(const Polynomial<GoldenNumber>& p);
std::string polynomial_json(const Polynomial<RootThreeNumber>& p);

std::string rational_function_json(const RationalFunction& f);

// Catalog entry as a field descriptor:
//   {name, dimension, terms: [{component, kind, arg, polynomial}]}
// for trig/polynomial entries; rational entries carry per-component
// numerator/denominator maps instead of terms. Unknown names throw
// std::invalid_argument listing the catalog.
std::string field_descriptor_json(const std::string& name);

// Truncated Taylor expansion of a trig catalog entry, one polynomial per
// component. Rational-function entries are rejected.
std::string taylor_json(const std::string& name, int degree);

std::string orbit_csv(const OrbitRecord& rec);
std::string orbit_json(const OrbitRecord& rec);

std::string zero_report_json(const LineZeroReport& report);
std::string zero_reports_json(const std::vector<LineZeroReport>& reports);

std::string limsup_json(const std::vector<LimsupSample>& samples);

}  // namespace beltrami
