#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "beltrami/io.hpp"

namespace {

using namespace beltrami;
using json = nlohmann::json;

}  // namespace

TEST_CASE("scalar strings") {
  CHECK(scalar_string(Rational(-3, 4)) == "-3/4");
  CHECK(scalar_string(golden_ratio()) == "1/2 + (1/2)√5");
  CHECK(scalar_string(RootThreeNumber::sqrt_radicand()) == "0/1 + (1/1)√3");
}

TEST_CASE("polynomial maps use exponent keys") {
  GoldenPoly p(3);
  p.add_term({0, 1, 5}, gn(Rational(5), Rational(-1)));
  p.add_term({4, 1, 1}, gn(-10));
  const json parsed = json::parse(polynomial_json(p));
  CHECK(parsed.size() == 2);
  CHECK(parsed.at("0,1,5") == "5/1 + (-1/1)√5");
  CHECK(parsed.at("4,1,1") == "-10/1 + (0/1)√5");

  // One-variable polynomials carry single-entry keys.
  Polynomial<Rational> q(1);
  q.add_term({3, 0, 0}, Rational(1, 6));
  CHECK(json::parse(polynomial_json(q)).at("3") == "1/6");
}

TEST_CASE("group and line exports") {
  const json group = json::parse(group_json(icosahedral_group()));
  REQUIRE(group.is_array());
  CHECK(group.size() == 60);
  CHECK(group[0].size() == 3);
  CHECK(group[0][0].size() == 3);

  const auto lines = orbit_of_line(icosahedral_group(), Vec3G{gn(1), gn(1), gn(1)});
  const json line_set = json::parse(line_set_json(lines));
  CHECK(line_set.size() == 20);
  CHECK(line_set[0].size() == 3);
}

TEST_CASE("field descriptors") {
  const json trig = json::parse(field_descriptor_json("V"));
  CHECK(trig.at("name") == "V");
  CHECK(trig.at("dimension") == 3);
  REQUIRE(trig.contains("terms"));
  const auto& term = trig.at("terms").at(0);
  CHECK(term.contains("component"));
  CHECK(term.contains("kind"));
  CHECK(term.contains("arg"));
  CHECK(term.contains("polynomial"));

  const json planar = json::parse(field_descriptor_json("D"));
  CHECK(planar.at("dimension") == 2);

  const json rational = json::parse(field_descriptor_json("B_sasakian"));
  CHECK(rational.at("components").at(0).contains("numerator"));
  CHECK(rational.at("components").at(0).contains("denominator"));

  CHECK_THROWS_AS(field_descriptor_json("bogus"), std::invalid_argument);
  try {
    field_descriptor_json("bogus");
  } catch (const std::invalid_argument& e) {
    // The error names the catalog so callers can self-correct.
    CHECK(std::string(e.what()).find("B_sasakian") != std::string::npos);
  }
}

TEST_CASE("taylor export carries the quoted head coefficient") {
  const json t = json::parse(taylor_json("V", 6));
  CHECK(t.at("degree") == 6);
  REQUIRE(t.at("components").size() == 3);
  CHECK(t.at("components").at(0).at("0,1,5") == "5/768 + (-1/768)√5");
  CHECK(t.at("components").at(0).size() == 6);

  const json empty = json::parse(taylor_json("V", 5));
  CHECK(empty.at("components").at(0).empty());

  CHECK_THROWS_AS(taylor_json("B_sasakian", 4), std::invalid_argument);
  CHECK_THROWS_AS(taylor_json("bogus", 4), std::invalid_argument);
}

TEST_CASE("orbit exports") {
  const OrbitRecord rec = rk4_orbit(catalog().I, {5.0, 6.0, 7.0}, 0.01, 1e-3);

  const std::string csv = orbit_csv(rec);
  CHECK(csv.substr(0, 8) == "t,x,y,z\n");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);  // header + 11 samples

  // Full precision: parsing the last row back reproduces the endpoint bits.
  const size_t last_break = csv.rfind('\n', csv.size() - 2);
  const std::string last_row = csv.substr(last_break + 1);
  double t, x, y, z;
  REQUIRE(std::sscanf(last_row.c_str(), "%lf,%lf,%lf,%lf", &t, &x, &y, &z) == 4);
  CHECK(t == rec.samples.back().t);
  CHECK(x == rec.samples.back().x[0]);
  CHECK(y == rec.samples.back().x[1]);
  CHECK(z == rec.samples.back().x[2]);

  const json j = json::parse(orbit_json(rec));
  CHECK(j.at("integrator") == "rk4");
  CHECK(j.at("step") == 1e-3);
  CHECK(j.at("overflow") == false);
  CHECK(j.at("samples").size() == rec.samples.size());

  // Byte determinism across repeated runs.
  const OrbitRecord again = rk4_orbit(catalog().I, {5.0, 6.0, 7.0}, 0.01, 1e-3);
  CHECK(orbit_csv(again) == csv);
  CHECK(orbit_json(again) == orbit_json(rec));
}

TEST_CASE("planar orbits export two columns") {
  std::vector<TrigExpr<RootThreeNumber>> comps{TrigExpr<RootThreeNumber>(2),
                                               TrigExpr<RootThreeNumber>(2)};
  comps[0].add_term(TrigKind::One, LinearForm<RootThreeNumber>(2),
                    Polynomial<RootThreeNumber>::constant(2, RootThreeNumber(Rational(1))));
  const CompiledField v(comps);
  const OrbitRecord rec = rk4_orbit(v, {0.0, 0.0}, 0.01, 1e-2);
  CHECK(orbit_csv(rec).substr(0, 6) == "t,x,y\n");
}

TEST_CASE("zero reports and ratio samples") {
  const auto reports = line_zero_map(catalog().I, LineClass::F, 8.0);
  const json all = json::parse(zero_reports_json(reports));
  REQUIRE(all.size() == 12);
  CHECK(all[0].at("line_class") == "F");
  CHECK(all[0].at("direction").size() == 3);
  CHECK(all[0].at("roots").size() == 2);
  CHECK(all[0].at("brackets").at(0).size() == 2);

  const json single = json::parse(zero_report_json(reports.front()));
  CHECK(single == all[0]);

  const json probe = json::parse(limsup_json(limsup_probe({1, 2, 3})));
  REQUIRE(probe.size() == 3);
  CHECK(probe[0].at("n") == 1);
  CHECK(probe[0].contains("s"));
  CHECK(probe[0].contains("ratio"));
}

TEST_CASE("rational function export") {
  const json u = json::parse(rational_function_json(cyclic_averaged_component()));
  REQUIRE(u.contains("numerator"));
  REQUIRE(u.contains("denominator"));
  CHECK(u.at("numerator").at("0,0,0") == "1/1");
  CHECK(u.at("denominator").at("0,0,0") == "1/1");
  CHECK(u.at("numerator").at("1,1,0") == "2/1");
}
