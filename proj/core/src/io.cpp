#include "beltrami/io.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace beltrami {

namespace {

using json = nlohmann::ordered_json;

std::string dumped(const json& j) { return j.dump(2) + "\n"; }

std::string exponent_key(const Exponents& e, int dim) {
  std::string key;
  for (int i = 0; i < dim; ++i) {
    if (i > 0) key += ',';
    key += std::to_string(e[static_cast<size_t>(i)]);
  }
  return key;
}

template <class Scalar>
json poly_json(const Polynomial<Scalar>& p) {
  json out = json::object();
  for (const auto& [e, c] : p.terms()) out[exponent_key(e, p.dimension())] = scalar_string(c);
  return out;
}

template <class Scalar>
json terms_json(const VectorFieldExpr<Scalar>& f) {
  json terms = json::array();
  for (int i = 0; i < f.dimension(); ++i) {
    for (const auto& [key, poly] : f.component(i).terms()) {
      json term;
      term["component"] = i;
      term["kind"] = trig_kind_name(key.kind);
      json arg = json::array();
      for (int j = 0; j < f.dimension(); ++j) arg.push_back(scalar_string(key.argument.coefficient(j)));
      term["arg"] = std::move(arg);
      term["polynomial"] = poly_json(poly);
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

template <class Scalar>
json descriptor_json(const std::string& name, const VectorFieldExpr<Scalar>& f) {
  json out;
  out["name"] = name;
  out["dimension"] = f.dimension();
  out["terms"] = terms_json(f);
  return out;
}

json rational_descriptor_json(const std::string& name, const RationalVectorField& f) {
  json out;
  out["name"] = name;
  out["dimension"] = 3;
  json comps = json::array();
  for (int i = 0; i < 3; ++i) {
    json c;
    c["numerator"] = poly_json(f.component(i).num);
    c["denominator"] = poly_json(f.component(i).den);
    comps.push_back(std::move(c));
  }
  out["components"] = std::move(comps);
  return out;
}

[[noreturn]] void throw_unknown_name(const std::string& name) {
  std::string msg = "unknown field '" + name + "'; catalog:";
  for (const auto& n : catalog_names()) msg += " " + n;
  throw std::invalid_argument(msg);
}

json direction_json(const Vec3G& d) {
  return json::array({scalar_string(d.v[0]), scalar_string(d.v[1]), scalar_string(d.v[2])});
}

json report_json(const LineZeroReport& report) {
  json out;
  out["line_class"] = line_class_name(report.line_class);
  out["direction"] = direction_json(report.direction);
  out["roots"] = report.roots;
  json brackets = json::array();
  for (const auto& [lo, hi] : report.brackets) brackets.push_back(json::array({lo, hi}));
  out["brackets"] = std::move(brackets);
  return out;
}

std::string full_precision(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string scalar_string(const Rational& v) { return rat_to_string(v); }
std::string scalar_string(const GoldenNumber& v) { return v.str(); }
std::string scalar_string(const RootThreeNumber& v) { return v.str(); }

std::string group_json(const MatrixGroup& g) {
  json out = json::array();
  for (const Mat3G& m : g.elements) {
    json rows = json::array();
    for (size_t r = 0; r < 3; ++r) {
      rows.push_back(json::array(
          {scalar_string(m.at(r, 0)), scalar_string(m.at(r, 1)), scalar_string(m.at(r, 2))}));
    }
    out.push_back(std::move(rows));
  }
  return dumped(out);
}

std::string line_set_json(const std::vector<Vec3G>& lines) {
  json out = json::array();
  for (const Vec3G& d : lines) out.push_back(direction_json(d));
  return dumped(out);
}

std::string polynomial_json(const Polynomial<Rational>& p) { return dumped(poly_json(p)); }
std::string polynomial_json(const Polynomial<GoldenNumber>& p) { return dumped(poly_json(p)); }
std::string polynomial_json(const Polynomial<RootThreeNumber>& p) { return dumped(poly_json(p)); }

std::string rational_function_json(const RationalFunction& f) {
  json out;
  out["numerator"] = poly_json(f.num);
  out["denominator"] = poly_json(f.den);
  return dumped(out);
}

std::string field_descriptor_json(const std::string& name) {
  const FieldCatalog& cat = catalog();
  if (name == "D") return dumped(descriptor_json(name, cat.D));
  if (name == "B_sasakian") return dumped(rational_descriptor_json(name, cat.B_sasakian));
  if (name == "F_averaged") return dumped(rational_descriptor_json(name, cat.F_averaged));
  if (const auto field = catalog_trig_entry(name)) return dumped(descriptor_json(name, *field));
  throw_unknown_name(name);
}

std::string taylor_json(const std::string& name, int degree) {
  if (degree < 0) throw std::invalid_argument("taylor_json: negative degree");
  json out;
  out["name"] = name;
  out["degree"] = degree;
  json comps = json::array();
  if (name == "D") {
    const FieldCatalog& cat = catalog();
    for (const auto& p : cat.D.taylor(degree)) comps.push_back(poly_json(p));
  } else if (name == "B_sasakian" || name == "F_averaged") {
    throw std::invalid_argument("taylor_json: '" + name +
                                "' is a rational-function entry without a Taylor export");
  } else if (const auto field = catalog_trig_entry(name)) {
    for (const auto& p : field->taylor(degree)) comps.push_back(poly_json(p));
  } else {
    throw_unknown_name(name);
  }
  out["components"] = std::move(comps);
  return dumped(out);
}

std::string orbit_csv(const OrbitRecord& rec) {
  const size_t dim = rec.initial.size();
  std::string out = dim == 2 ? "t,x,y\n" : "t,x,y,z\n";
  for (const auto& sample : rec.samples) {
    out += full_precision(sample.t);
    for (double v : sample.x) {
      out += ',';
      out += full_precision(v);
    }
    out += '\n';
  }
  return out;
}

std::string orbit_json(const OrbitRecord& rec) {
  json out;
  out["initial"] = rec.initial;
  out["step"] = rec.step;
  out["integrator"] = rec.integrator;
  out["overflow"] = rec.overflow;
  json samples = json::array();
  for (const auto& sample : rec.samples) {
    json s;
    s["t"] = sample.t;
    s["x"] = sample.x;
    samples.push_back(std::move(s));
  }
  out["samples"] = std::move(samples);
  return dumped(out);
}

std::string zero_report_json(const LineZeroReport& report) { return dumped(report_json(report)); }

std::string zero_reports_json(const std::vector<LineZeroReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(report_json(r));
  return dumped(out);
}

std::string limsup_json(const std::vector<LimsupSample>& samples) {
  json out = json::array();
  for (const auto& s : samples) {
    json row;
    row["n"] = s.n;
    row["s"] = s.s;
    row["ratio"] = s.ratio;
    out.push_back(std::move(row));
  }
  return dumped(out);
}

}  // namespace beltrami
