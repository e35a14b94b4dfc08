#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewtorus/circle.hpp"
#include "skewtorus/errors.hpp"
#include "support.hpp"

#include <cmath>
#include <numbers>

using namespace skewtorus;
using namespace skewtorus::testing;

TEST_CASE("frac reduces into [0, 1)") {
  CHECK(frac(mpq_class(7, 3)) == mpq_class(1, 3));
  CHECK(frac(mpq_class(-1, 4)) == mpq_class(3, 4));
  CHECK(frac(mpq_class(2)) == 0);
  CHECK(frac(mpq_class(-6, 4)) == mpq_class(1, 2));
}

TEST_CASE("addition") {
  CHECK((Angle(mpq_class(1, 2)) + Angle(mpq_class(1, 2))).is_zero());
  CHECK((A("b1") + A("-1*b1")).is_zero());
  CHECK(A("1/3 + 1/2*b1") + A("2/3 + 1/2*b1") == A("b1"));
  CHECK(A("1/3") - A("1/2") == A("5/6"));
  CHECK(-A("1/4 + b2") == A("3/4 - b2"));
}

TEST_CASE("integer multiples") {
  CHECK((3 * A("1/3")).is_zero());
  CHECK(2 * A("1/2*b1") == A("b1"));
  CHECK(-1 * A("1/4") == A("3/4"));
  CHECK((0 * A("1/7 + b1")).is_zero());
}

TEST_CASE("non-canonical rationals are normalised on construction") {
  const auto basis = default_ctx()->basis;
  const Angle a(basis, mpq_class(594, 720), {{0, mpq_class(3, 15)}});
  CHECK(a.rat() == mpq_class(33, 40));
  CHECK(a.coeff(0) == mpq_class(1, 5));
  CHECK(a == A("33/40 + 1/5*b1"));
}

TEST_CASE("torsion order") {
  CHECK(torsion_order(A("1/3")) == mpz_class(3));
  CHECK_FALSE(torsion_order(A("1/2*b1")).has_value());
  CHECK(torsion_order(Angle()) == mpz_class(1));
  CHECK(torsion_order(A("4/6")) == mpz_class(3));
}

TEST_CASE("unit circle embedding") {
  CHECK(to_unit(A("1/2")) == std::complex<double>(-1.0, 0.0));
  CHECK(to_unit(A("1/4")) == std::complex<double>(0.0, 1.0));
  const double t = 2 * std::numbers::pi * (std::numbers::sqrt2 - 1);
  const auto z = to_unit(A("b1"));
  CHECK(z.real() == doctest::Approx(std::cos(t)).epsilon(1e-14));
  CHECK(z.imag() == doctest::Approx(std::sin(t)).epsilon(1e-14));
  // Large integer multiples are reduced exactly before rounding.
  const auto w = to_unit(mpz_class("1000000000000") * A("b1"));
  CHECK(std::abs(w) == doctest::Approx(1.0));
}

TEST_CASE("phase") {
  CHECK(phase(A("3/4")) == 0.75);
  CHECK(phase(A("b1")) == doctest::Approx(std::numbers::sqrt2 - 1).epsilon(1e-15));
  CHECK(phase(A("-1*b1")) == doctest::Approx(2 - std::numbers::sqrt2).epsilon(1e-15));
}

TEST_CASE("mismatched bases are a configuration error") {
  const auto other = make_basis({{"b1", "0.5000000000000000000000000000001"}});
  const Angle a = Angle::term(other, 0, 1);
  CHECK_THROWS_AS((void)(a == A("b1")), ConfigError);
  CHECK_THROWS_AS(a + A("b1"), ConfigError);
}

TEST_CASE("basis declaration validation") {
  CHECK_THROWS_AS(make_basis({{"b1", "0.5"}, {"b1", "0.25"}}), ConfigError);
  CHECK_THROWS_AS(make_basis({{"", "0.5"}}), ConfigError);
  CHECK_THROWS_AS(make_basis({{"b1", "1.5"}}), ConfigError);
  CHECK_THROWS_AS(make_basis({{"b1", "abc"}}), ConfigError);
  CHECK_THROWS_AS(Angle::term(make_basis({{"b1", "0.5"}}), 3, 1), ConfigError);
}
