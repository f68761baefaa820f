#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "beltrami/dynamics.hpp"
#include "beltrami/io.hpp"
#include "beltrami/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw UsageError("cannot open output file '" + out_path + "'");
  out << text;
}

std::string pick_name(const std::string& positional, const std::string& flag,
                      const char* what) {
  if (!flag.empty()) return flag;
  if (!positional.empty()) return positional;
  throw UsageError(std::string("missing ") + what);
}

std::vector<double> parse_point(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse coordinate '" + item + "' in --x0");
    }
  }
  if (out.empty()) throw UsageError("--x0 must list coordinates as x,y,z");
  return out;
}

int taylor_cap() {
  if (const char* env = std::getenv("BELTRAMI_TAYLOR_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string("BELTRAMI_TAYLOR_CAP is not an integer: ") + env);
    }
  }
  return 16;
}

beltrami::LineClass parse_line_class(const std::string& text) {
  if (text == "F") return beltrami::LineClass::F;
  if (text == "V") return beltrami::LineClass::V;
  if (text == "E") return beltrami::LineClass::E;
  throw UsageError("unknown line class '" + text + "'; expected F, V or E");
}

int run_verify(const std::string& scope, const std::string& out_path) {
  const auto groups =
      scope == "all" ? beltrami::run_all_checks() : beltrami::run_checks_for(scope);
  write_output(beltrami::checks_json(groups), out_path);
  return beltrami::all_passed(groups) ? kExitPass : kExitVerifyFail;
}

int run_taylor(const std::string& field, int degree, const std::string& out_path) {
  if (degree < 0) throw UsageError("missing or negative degree");
  const int cap = taylor_cap();
  if (degree > cap) {
    throw UsageError("degree " + std::to_string(degree) + " exceeds the Taylor cap " +
                     std::to_string(cap) + " (override with BELTRAMI_TAYLOR_CAP)");
  }
  write_output(beltrami::taylor_json(field, degree), out_path);
  return kExitPass;
}

int run_orbit(const std::string& field, const std::string& x0_text, double t_end, double h,
              const std::string& out_path, const std::string& format) {
  if (format != "csv" && format != "json") {
    throw UsageError("unknown format '" + format + "'; expected csv or json");
  }
  if (!(h > 0.0)) throw UsageError("--step must be positive");
  if (!(t_end > 0.0)) throw UsageError("--t-end must be positive");
  const std::vector<double> x0 = parse_point(x0_text);

  std::optional<beltrami::CompiledField> compiled;
  if (field == "D") {
    compiled.emplace(beltrami::catalog().D);
  } else if (const auto entry = beltrami::catalog_trig_entry(field)) {
    compiled.emplace(*entry);
  } else {
    throw UsageError("field '" + field +
                     "' is not integrable here; supported: V W I V0 W0 Y M N P Q ABC D");
  }
  if (static_cast<int>(x0.size()) != compiled->dimension()) {
    throw UsageError("--x0 lists " + std::to_string(x0.size()) + " coordinates, field '" + field +
                     "' has dimension " + std::to_string(compiled->dimension()));
  }
  const beltrami::OrbitRecord rec = beltrami::rk4_orbit(*compiled, x0, t_end, h);
  write_output(format == "csv" ? beltrami::orbit_csv(rec) : beltrami::orbit_json(rec), out_path);
  return kExitPass;
}

int run_zeros(const std::string& cls_text, const std::string& field, double s_max,
              double scan_step, const std::string& out_path) {
  static const std::vector<std::string> symmetric = {"V", "W", "I", "V0", "W0",
                                                     "Y", "M", "N", "P", "Q"};
  if (std::find(symmetric.begin(), symmetric.end(), field) == symmetric.end()) {
    std::string msg = "field '" + field + "' is not icosahedrally symmetric; supported:";
    for (const auto& n : symmetric) msg += " " + n;
    throw UsageError(msg);
  }
  if (!(s_max > 0.0)) throw UsageError("--s-max must be positive");
  const beltrami::LineClass cls = parse_line_class(cls_text);
  const auto entry = beltrami::catalog_trig_entry(field);
  const auto reports = beltrami::line_zero_map(*entry, cls, s_max, scan_step);
  write_output(beltrami::zero_reports_json(reports), out_path);
  return kExitPass;
}

int run_lines(const std::string& out_path) {
  const beltrami::MatrixGroup group = beltrami::icosahedral_group();
  std::vector<beltrami::Vec3G> all;
  for (auto cls : {beltrami::LineClass::F, beltrami::LineClass::V, beltrami::LineClass::E}) {
    const auto orbit =
        beltrami::orbit_of_line(group, beltrami::line_class_representative(cls));
    all.insert(all.end(), orbit.begin(), orbit.end());
  }
  write_output(beltrami::line_set_json(all), out_path);
  return kExitPass;
}

int run_bracket(const std::string& out_path) {
  const beltrami::FieldCatalog& cat = beltrami::catalog();
  const beltrami::GoldenField bracket =
      lie_bracket(beltrami::polynomial_field(cat.N), beltrami::polynomial_field(cat.Q));
  std::string text = "{\n  \"nonzero\": false\n}\n";
  for (int i = 0; i < 3; ++i) {
    for (const auto& [key, poly] : bracket.component(i).terms()) {
      if (poly.is_zero()) continue;
      const auto& [e, c] = *poly.terms().begin();
      text = std::string("{\n  \"nonzero\": true,\n  \"witness\": {\n    \"component\": ") +
             std::to_string(i) + ",\n    \"monomial\": \"" + std::to_string(e[0]) + "," +
             std::to_string(e[1]) + "," + std::to_string(e[2]) + "\",\n    \"coefficient\": \"" +
             beltrami::scalar_string(c) + "\"\n  }\n}\n";
      i = 3;
      break;
    }
  }
  write_output(text, out_path);
  return kExitPass;
}

// Grid scan for small |I| followed by damped Newton steps on a
// finite-difference Jacobian; reports converged candidates only. Zeros on the
// 62 symmetry lines (and the origin) are expected hits.
int run_search(double extent, double grid_step, double tol, const std::string& out_path) {
  if (!(extent > 0.0) || !(grid_step > 0.0)) {
    throw UsageError("--extent and --grid-step must be positive");
  }
  const beltrami::CompiledField cf(beltrami::catalog().I);
  const auto norm = [&cf](const beltrami::NumericPoint& p) {
    const auto v = cf.eval(p);
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  };
  std::vector<beltrami::NumericPoint> candidates;
  for (double x = -extent; x <= extent + 1e-12; x += grid_step) {
    for (double y = -extent; y <= extent + 1e-12; y += grid_step) {
      for (double z = -extent; z <= extent + 1e-12; z += grid_step) {
        beltrami::NumericPoint p{x, y, z};
        bool converged = false;
        for (int iter = 0; iter < 60; ++iter) {
          const auto f = cf.eval(p);
          const double r = std::sqrt(f[0] * f[0] + f[1] * f[1] + f[2] * f[2]);
          if (r < tol) {
            converged = true;
            break;
          }
          double jac[3][3];
          const double h = 1e-6;
          for (int j = 0; j < 3; ++j) {
            auto pp = p, pm = p;
            pp[static_cast<size_t>(j)] += h;
            pm[static_cast<size_t>(j)] -= h;
            const auto fp = cf.eval(pp), fm = cf.eval(pm);
            for (int i = 0; i < 3; ++i) jac[i][j] = (fp[static_cast<size_t>(i)] - fm[static_cast<size_t>(i)]) / (2 * h);
          }
          const double det = jac[0][0] * (jac[1][1] * jac[2][2] - jac[1][2] * jac[2][1]) -
                             jac[0][1] * (jac[1][0] * jac[2][2] - jac[1][2] * jac[2][0]) +
                             jac[0][2] * (jac[1][0] * jac[2][1] - jac[1][1] * jac[2][0]);
          if (std::abs(det) < 1e-12) break;
          double inv[3][3];
          inv[0][0] = (jac[1][1] * jac[2][2] - jac[1][2] * jac[2][1]) / det;
          inv[0][1] = (jac[0][2] * jac[2][1] - jac[0][1] * jac[2][2]) / det;
          inv[0][2] = (jac[0][1] * jac[1][2] - jac[0][2] * jac[1][1]) / det;
          inv[1][0] = (jac[1][2] * jac[2][0] - jac[1][0] * jac[2][2]) / det;
          inv[1][1] = (jac[0][0] * jac[2][2] - jac[0][2] * jac[2][0]) / det;
          inv[1][2] = (jac[0][2] * jac[1][0] - jac[0][0] * jac[1][2]) / det;
          inv[2][0] = (jac[1][0] * jac[2][1] - jac[1][1] * jac[2][0]) / det;
          inv[2][1] = (jac[0][1] * jac[2][0] - jac[0][0] * jac[2][1]) / det;
          inv[2][2] = (jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0]) / det;
          beltrami::NumericPoint next(3);
          for (int i = 0; i < 3; ++i) {
            next[static_cast<size_t>(i)] =
                p[static_cast<size_t>(i)] - (inv[i][0] * f[0] + inv[i][1] * f[1] + inv[i][2] * f[2]);
          }
          if (!beltrami::point_is_finite(next)) break;
          p = std::move(next);
        }
        if (!converged || !beltrami::point_is_finite(p)) continue;
        bool duplicate = false;
        for (const auto& q : candidates) {
          const double d = std::max({std::abs(p[0] - q[0]), std::abs(p[1] - q[1]),
                                     std::abs(p[2] - q[2])});
          if (d < 1e-6) {
            duplicate = true;
            break;
          }
        }
        if (!duplicate) candidates.push_back(p);
      }
    }
  }
  std::sort(candidates.begin(), candidates.end());
  std::string text = "[\n";
  for (size_t i = 0; i < candidates.size(); ++i) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "  {\"point\": [%.17g, %.17g, %.17g], \"norm\": %.3e}%s\n", candidates[i][0],
                  candidates[i][1], candidates[i][2], norm(candidates[i]),
                  i + 1 < candidates.size() ? "," : "");
    text += buf;
  }
  text += "]\n";
  write_output(text, out_path);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact icosahedral curl eigenfields: construction, verification, dynamics"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options (--out) after the subcommand

  std::string out_path;
  app.add_option("--out", out_path, "write output to this file instead of stdout")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run verification checks (exit 1 on failure)");
  std::string scope_pos, scope_flag = "";
  verify->add_option("scope", scope_pos, "all or a catalog entry name");
  verify->add_option("--field", scope_flag, "catalog entry to verify");

  auto* taylor = app.add_subcommand("taylor", "exact Taylor expansion of a catalog entry");
  std::string taylor_field_pos, taylor_field_flag;
  int taylor_degree_pos = -1, taylor_degree_flag = -1;
  taylor->add_option("entry", taylor_field_pos, "catalog entry");
  taylor->add_option("deg", taylor_degree_pos, "expansion degree");
  taylor->add_option("--field", taylor_field_flag, "catalog entry");
  taylor->add_option("--degree", taylor_degree_flag, "expansion degree");

  auto* orbit = app.add_subcommand("orbit", "integrate dx/dt = field(x) with fixed-step RK4");
  std::string orbit_field_pos, orbit_field_flag, x0_text = "5,6,7", format = "csv";
  double t_end = 1.0, step = 1e-3;
  orbit->add_option("entry", orbit_field_pos, "catalog entry");
  orbit->add_option("--field", orbit_field_flag, "catalog entry");
  orbit->add_option("--x0", x0_text, "initial point as x,y,z")->capture_default_str();
  orbit->add_option("--t-end", t_end, "integration time")->capture_default_str();
  orbit->add_option("--step", step, "RK4 step size")->capture_default_str();
  orbit->add_option("--format", format, "csv or json")->capture_default_str();

  auto* zeros = app.add_subcommand("zeros", "zeros of a symmetric field on a line-class orbit");
  std::string zeros_class, zeros_field = "I";
  double s_max_pos = -1.0, s_max_flag = -1.0, scan_step = 1e-2;
  zeros->add_option("class", zeros_class, "line class: F, V or E")->required();
  zeros->add_option("smax", s_max_pos, "scan upper bound");
  zeros->add_option("--s-max", s_max_flag, "scan upper bound");
  zeros->add_option("--field", zeros_field, "catalog entry")->capture_default_str();
  zeros->add_option("--scan-step", scan_step, "sign-change scan step")->capture_default_str();

  app.add_subcommand("lines", "the 62 symmetry lines as canonical directions");

  app.add_subcommand("bracket", "Lie bracket witness for the Taylor-head pair (N, Q)");

  auto* search = app.add_subcommand("search", "grid+Newton search for zeros of I");
  double extent = 3.0, grid_step = 0.75, search_tol = 1e-10;
  search->add_option("--extent", extent, "half-width of the search cube")->capture_default_str();
  search->add_option("--grid-step", grid_step, "grid spacing")->capture_default_str();
  search->add_option("--tol", search_tol, "acceptance tolerance on |I|")->capture_default_str();

  try {
    app.parse(argc, argv);

    if (verify->parsed()) {
      const std::string scope =
          !scope_flag.empty() ? scope_flag : (scope_pos.empty() ? "all" : scope_pos);
      return run_verify(scope, out_path);
    }
    if (taylor->parsed()) {
      const std::string field = pick_name(taylor_field_pos, taylor_field_flag, "field name");
      const int degree = taylor_degree_flag >= 0 ? taylor_degree_flag : taylor_degree_pos;
      return run_taylor(field, degree, out_path);
    }
    if (orbit->parsed()) {
      const std::string field = pick_name(orbit_field_pos, orbit_field_flag, "field name");
      return run_orbit(field, x0_text, t_end, step, out_path, format);
    }
    if (zeros->parsed()) {
      const double s_max = s_max_flag > 0.0 ? s_max_flag : s_max_pos;
      return run_zeros(zeros_class, zeros_field, s_max, scan_step, out_path);
    }
    if (app.get_subcommand("lines")->parsed()) return run_lines(out_path);
    if (app.get_subcommand("bracket")->parsed()) return run_bracket(out_path);
    if (search->parsed()) return run_search(extent, grid_step, search_tol, out_path);
    throw UsageError("no subcommand");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitPass;
}
