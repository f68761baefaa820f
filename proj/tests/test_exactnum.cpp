#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "beltrami/quadratic.hpp"

namespace {

using namespace beltrami;

// Independent 100-digit embedding used as the oracle for sign, order and
// rounding checks; twice the precision of the library's internal path.
using BigFloat100 = boost::multiprecision::cpp_bin_float_100;

BigFloat100 embedded(const GoldenNumber& x) {
  static const BigFloat100 root5 = sqrt(BigFloat100(5));
  return static_cast<BigFloat100>(x.rational_part()) +
         static_cast<BigFloat100>(x.radical_part()) * root5;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-1000000000LL, 1000000000LL);
  std::uniform_int_distribution<long long> den(1LL, 1000000000LL);
  return Rational(Integer(num(rng)), Integer(den(rng)));
}

GoldenNumber random_golden(std::mt19937_64& rng) {
  return GoldenNumber(random_rational(rng), random_rational(rng));
}

}  // namespace

TEST_CASE("golden ratio identities") {
  const GoldenNumber phi = golden_ratio();
  const GoldenNumber one = GoldenNumber::one();

  CHECK(phi * phi == phi + one);
  CHECK(phi.inverse() == phi - one);
  CHECK(phi.inverse() == golden_ratio_inverse());
  CHECK(phi * phi + phi.inverse() * phi.inverse() + one == GoldenNumber(Rational(4)));
  CHECK(phi + phi.inverse() == root_five());
  CHECK(phi - phi.inverse() == one);
  CHECK(phi.conjugate() == -golden_ratio_inverse());
  CHECK(root_five().conjugate() == -root_five());
}

TEST_CASE("conjugation is a ring automorphism and an involution") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const GoldenNumber x = random_golden(rng);
    const GoldenNumber y = random_golden(rng);
    CHECK((x + y).conjugate() == x.conjugate() + y.conjugate());
    CHECK((x * y).conjugate() == x.conjugate() * y.conjugate());
    CHECK(x.conjugate().conjugate() == x);
  }
  const GoldenNumber rational(Rational(3, 7));
  CHECK(rational.conjugate() == rational);
}

TEST_CASE("field inverses") {
  std::mt19937_64 rng(12);
  const GoldenNumber one = GoldenNumber::one();
  for (int i = 0; i < 500; ++i) {
    const GoldenNumber x = random_golden(rng);
    if (x.is_zero()) continue;
    CHECK(x * x.inverse() == one);
    CHECK(x / x == one);
  }
  CHECK_THROWS_AS(GoldenNumber::zero().inverse(), std::domain_error);
  CHECK(GoldenNumber::zero().norm() == Rational(0));
}

TEST_CASE("exact sign agrees with the high-precision embedding") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const GoldenNumber x = random_golden(rng);
    const BigFloat100 v = embedded(x);
    const int oracle = v == 0 ? 0 : (v > 0 ? 1 : -1);
    CHECK(x.sign() == oracle);
  }

  CHECK((golden_ratio() - GoldenNumber(Rational(8, 5))).sign() > 0);
  CHECK(golden_ratio().conjugate().sign() < 0);
  CHECK(GoldenNumber::zero().sign() == 0);
  // Mixed-sign parts close in magnitude: 5*s^2 vs r^2 decides.
  CHECK(GoldenNumber(Rational(-9), Rational(4)).sign() < 0);   // 4*sqrt5 < 9
  CHECK(GoldenNumber(Rational(-89), Rational(40)).sign() > 0); // 40*sqrt5 > 89
}

TEST_CASE("ordering is the real-embedding order") {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 500; ++i) {
    const GoldenNumber x = random_golden(rng);
    const GoldenNumber y = random_golden(rng);
    CHECK((x < y) == (embedded(x) < embedded(y)));
    CHECK((x == y) == (embedded(x) == embedded(y)));
  }
}

TEST_CASE("rounding to double") {
  CHECK(golden_ratio().to_double() == 1.6180339887498949);
  CHECK(root_five().to_double() == 2.23606797749979);
  CHECK(golden_ratio_inverse().to_double() == 0.6180339887498949);

  std::mt19937_64 rng(15);
  for (int i = 0; i < 1000; ++i) {
    const GoldenNumber x = random_golden(rng);
    CHECK(x.to_double() == static_cast<double>(embedded(x)));
  }
}

TEST_CASE("canonical text round trip") {
  CHECK(golden_ratio().str() == "1/2 + (1/2)√5");
  CHECK(rat_to_string(Rational(-3, 4)) == "-3/4");

  std::mt19937_64 rng(16);
  for (int i = 0; i < 200; ++i) {
    const GoldenNumber x = random_golden(rng);
    const auto parsed = quadratic_parse<5>(x.str());
    REQUIRE(parsed.has_value());
    CHECK(*parsed == x);

    const Rational q = random_rational(rng);
    const auto rparsed = rat_parse(rat_to_string(q));
    REQUIRE(rparsed.has_value());
    CHECK(*rparsed == q);
  }

  CHECK(rat_parse("7") == Rational(7));
  CHECK(rat_parse("  -12/8 ") == Rational(-3, 2));
  CHECK(quadratic_parse<5>("3/4") == GoldenNumber(Rational(3, 4)));
  CHECK_FALSE(rat_parse("").has_value());
  CHECK_FALSE(rat_parse("1/0").has_value());
  CHECK_FALSE(rat_parse("1.5").has_value());
  CHECK_FALSE(quadratic_parse<5>("1 + 2√5").has_value());
  CHECK_FALSE(quadratic_parse<5>("1 + (2)√3").has_value());
}

TEST_CASE("power and norm") {
  const GoldenNumber phi = golden_ratio();
  CHECK(phi.pow(0) == GoldenNumber::one());
  // phi^n = F(n)*phi + F(n-1) with Fibonacci F: phi^10 = 55*phi + 34.
  CHECK(phi.pow(10) == GoldenNumber(Rational(55)) * phi + GoldenNumber(Rational(34)));
  CHECK(phi.norm() == Rational(-1));
  CHECK(root_five().norm() == Rational(-5));

  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const GoldenNumber x = random_golden(rng);
    CHECK(x.norm() == (x * x.conjugate()).rational_part());
    CHECK((x * x.conjugate()).is_rational());
  }
}

TEST_CASE("second radicand instantiation stays separate") {
  const RootThreeNumber root3 = RootThreeNumber::sqrt_radicand();
  CHECK(root3 * root3 == RootThreeNumber(Rational(3)));
  CHECK(root3.to_double() == 1.7320508075688772);
  CHECK(root3.str() == "0/1 + (1/1)√3");
  CHECK((root3 - RootThreeNumber(Rational(7, 4))).sign() < 0);  // sqrt3 < 1.75
}
