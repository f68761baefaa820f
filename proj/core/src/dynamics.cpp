#include "beltrami/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace beltrami {

namespace {

const double kPhi = golden_ratio().to_double();
const double kSqrt5 = 2.0 * kPhi - 1.0;

NumericPoint axpy(const NumericPoint& x, double a, const NumericPoint& y) {
  NumericPoint out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] + a * y[i];
  return out;
}

}  // namespace

bool point_is_finite(const NumericPoint& p) {
  return std::all_of(p.begin(), p.end(), [](double v) { return std::isfinite(v); });
}

NumericPoint CompiledField::eval(const NumericPoint& p) const {
  if (static_cast<int>(p.size()) != dim_) {
    throw std::invalid_argument("CompiledField::eval: dimension mismatch");
  }
  NumericPoint out;
  out.reserve(components_.size());
  for (const auto& terms : components_) {
    double acc = 0.0;
    for (const auto& term : terms) {
      double poly = 0.0;
      for (const auto& [e, c] : term.monomials) {
        double mono = c;
        for (int j = 0; j < dim_; ++j) {
          const size_t sj = static_cast<size_t>(j);
          for (int k = 0; k < e[sj]; ++k) mono *= p[sj];
        }
        poly += mono;
      }
      if (term.kind != TrigKind::One) {
        double arg = 0.0;
        for (int j = 0; j < dim_; ++j) {
          arg += term.arg[static_cast<size_t>(j)] * p[static_cast<size_t>(j)];
        }
        poly *= term.kind == TrigKind::Sin ? std::sin(arg) : std::cos(arg);
      }
      acc += poly;
    }
    out.push_back(acc);
  }
  return out;
}

OrbitRecord rk4_orbit(const CompiledField& v, const NumericPoint& x0, double t_end, double h) {
  if (!(h > 0.0) || !(t_end > 0.0)) {
    throw std::invalid_argument("rk4_orbit: require h > 0 and t_end > 0");
  }
  if (static_cast<int>(x0.size()) != v.dimension()) {
    throw std::invalid_argument("rk4_orbit: dimension mismatch");
  }
  if (!point_is_finite(x0)) throw std::invalid_argument("rk4_orbit: non-finite initial point");

  OrbitRecord rec;
  rec.initial = x0;
  rec.step = h;
  rec.samples.push_back({0.0, x0});

  NumericPoint x = x0;
  double t = 0.0;
  for (long i = 1; t < t_end; ++i) {
    const double t_next = std::min(static_cast<double>(i) * h, t_end);
    const double step = t_next - t;
    const NumericPoint k1 = v.eval(x);
    const NumericPoint k2 = v.eval(axpy(x, step / 2.0, k1));
    const NumericPoint k3 = v.eval(axpy(x, step / 2.0, k2));
    const NumericPoint k4 = v.eval(axpy(x, step, k3));
    NumericPoint next(x.size());
    for (size_t j = 0; j < x.size(); ++j) {
      next[j] = x[j] + step / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
    if (!point_is_finite(next)) {
      rec.overflow = true;
      break;
    }
    x = std::move(next);
    t = t_next;
    rec.samples.push_back({t, x});
  }
  return rec;
}

OrbitRecord rk4_orbit(const GoldenField& v, const NumericPoint& x0, double t_end, double h) {
  return rk4_orbit(CompiledField(v), x0, t_end, h);
}

double upsilon_factor(double s) {
  return 1.0 - kPhi * std::cos(s) + (kPhi - 1.0) * std::cos(kPhi * s);
}

double upsilon(double s) { return -s * kSqrt5 * upsilon_factor(s); }

RootScan scan_roots(const std::function<double(double)>& f, double s_min, double s_max,
                    double scan_step) {
  if (!(s_min < s_max)) throw std::invalid_argument("scan_roots: require s_min < s_max");
  if (!(scan_step > 0.0)) throw std::invalid_argument("scan_roots: require scan_step > 0");

  RootScan out;
  const auto push_root = [&out](double root, double lo, double hi) {
    if (!out.roots.empty() && std::abs(root - out.roots.back()) < 1e-9) return;
    out.roots.push_back(root);
    out.brackets.emplace_back(lo, hi);
  };

  double prev_s = s_min;
  double prev_f = f(s_min);
  if (prev_f == 0.0) push_root(s_min, s_min, s_min);
  for (long i = 1; prev_s < s_max; ++i) {
    const double s = std::min(s_min + static_cast<double>(i) * scan_step, s_max);
    const double fs = f(s);
    if (fs == 0.0) {
      push_root(s, s, s);
    } else if (prev_f != 0.0 && std::signbit(fs) != std::signbit(prev_f)) {
      double lo = prev_s;
      double hi = s;
      double flo = prev_f;
      for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        const double mid = lo + (hi - lo) / 2.0;
        const double fm = f(mid);
        if (fm == 0.0) {
          lo = hi = mid;
          break;
        }
        if (std::signbit(fm) == std::signbit(flo)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      push_root(lo + (hi - lo) / 2.0, prev_s, s);
    }
    prev_s = s;
    prev_f = fs;
  }
  return out;
}

const char* line_class_name(LineClass c) {
  switch (c) {
    case LineClass::F: return "F";
    case LineClass::V: return "V";
    case LineClass::E: return "E";
  }
  return "?";
}

Vec3G line_class_representative(LineClass c) {
  const GoldenNumber one(1);
  const GoldenNumber zero(0);
  switch (c) {
    case LineClass::F: return Vec3G{golden_ratio(), one, zero};
    case LineClass::V: return Vec3G{one, one, one};
    case LineClass::E: return Vec3G{one, zero, zero};
  }
  throw std::invalid_argument("line_class_representative: invalid class");
}

LineZeroReport upsilon_roots(double s_min, double s_max, double scan_step) {
  const RootScan scan = scan_roots([](double s) { return upsilon(s); }, s_min, s_max, scan_step);
  LineZeroReport report;
  report.line_class = LineClass::F;
  report.direction = line_class_representative(LineClass::F);
  report.roots = scan.roots;
  report.brackets = scan.brackets;
  return report;
}

namespace {

CompiledField line_amplitude(const GoldenField& field, const Vec3G& direction) {
  const std::vector<GoldenNumber> d{direction.v[0], direction.v[1], direction.v[2]};
  const std::vector<GoldenTrig> restricted = field.restricted_to_line(d);
  GoldenTrig combo = restricted[0].scaled(d[0]);
  combo += restricted[1].scaled(d[1]);
  combo += restricted[2].scaled(d[2]);
  return CompiledField(std::vector<GoldenTrig>{std::move(combo)});
}

}  // namespace

CompiledLineFunction::CompiledLineFunction(const GoldenField& field, const Vec3G& direction)
    : amplitude_(line_amplitude(field, direction)) {}

double CompiledLineFunction::operator()(double s) const { return amplitude_.eval({s})[0]; }

std::vector<LineZeroReport> line_zero_map(const GoldenField& field, LineClass cls, double s_max,
                                          double scan_step) {
  if (!(s_max > 0.0)) throw std::invalid_argument("line_zero_map: require s_max > 0");
  if (!(scan_step > 0.0) || scan_step >= s_max) {
    throw std::invalid_argument("line_zero_map: require 0 < scan_step < s_max");
  }
  const Vec3G rep = line_class_representative(cls);
  const CompiledLineFunction f(field, rep);
  // The common zero at the origin is omitted: scan starts one step above 0.
  const RootScan scan =
      scan_roots([&f](double s) { return f(s); }, scan_step, s_max, scan_step);

  std::vector<LineZeroReport> reports;
  for (const Vec3G& dir : orbit_of_line(icosahedral_group(), rep)) {
    LineZeroReport report;
    report.line_class = cls;
    report.direction = dir;
    report.roots = scan.roots;
    report.brackets = scan.brackets;
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<LimsupSample> limsup_probe(const std::vector<int>& n_range) {
  std::vector<LimsupSample> out;
  for (int n : n_range) {
    if (n < 1 || n > 30) throw std::invalid_argument("limsup_probe: require 1 <= n <= 30");
    long long fib_prev = 1;  // F(1)
    long long fib = 1;       // F(2)
    for (int k = 2; k < 3 * n; ++k) {
      const long long next = fib_prev + fib;
      fib_prev = fib;
      fib = next;
    }
    const double s = std::numbers::pi_v<double> * static_cast<double>(fib);
    out.push_back({n, s, upsilon(s) / s});
  }
  return out;
}

}  // namespace beltrami
