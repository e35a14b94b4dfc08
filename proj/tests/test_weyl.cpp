#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewtorus/errors.hpp"
#include "skewtorus/weyl.hpp"
#include "support.hpp"

#include <cmath>
#include <complex>

using namespace skewtorus;
using namespace skewtorus::testing;

namespace {

// Reference values from an independent brute-force evaluation (Python big
// integers, 240-bit fixed point irrationals, naive summation).
constexpr double kOracleTol = 1e-9;

struct Ref {
  long k;
  double re, im;
};

void check_against(const PolyAngle &p, std::uint64_t N, std::initializer_list<Ref> refs) {
  for (const auto &r : refs) {
    const auto z = weyl_average(p, N, r.k);
    CHECK(std::abs(z.real() - r.re) < kOracleTol);
    CHECK(std::abs(z.imag() - r.im) < kOracleTol);
  }
}

} // namespace

TEST_CASE("quadratic irrational at N = 1000") {
  check_against(Poly("b1*C(n,2)"), 1000,
                {{0, 0.03210142434270748, 0.00013227277196620758},
                 {1000, -0.023408534162434765, 0.01728037527809006},
                 {1000000, -0.019310312218173874, 0.01704088029405235},
                 {1000000000, -0.007426765559810858, 0.029502709035062965}});
}

TEST_CASE("linear irrational") {
  const PolyAngle p = Poly("b1*C(n,1)");
  check_against(p, 1000,
                {{0, -0.0002520158682981928, 0.0005937217336662947},
                 {1000, -0.0006354243538121259, -0.00011069501110832986},
                 {1000000, 0.00045967914943557665, -0.00045245173717859365},
                 {1000000000, -0.0002487629355524058, -0.0005950920070015656}});
  check_against(p, 200000,
                {{0, -3.7554609984826094e-06, -1.5789491366032638e-06},
                 {1000000000, 3.7533069792803185e-06, -1.5840626268565434e-06}});
}

TEST_CASE("quadratic irrational at N = 2e5 stays under the calibrated bound") {
  const PolyAngle p = Poly("b1*C(n,2)");
  const double want[] = {0.0022960068415756934, 0.002215563931153028, 0.0019196878035149865,
                         0.0021334386137733434};
  const long shifts[] = {0, 1000, 1000000, 1000000000};
  for (int i = 0; i < 4; ++i) {
    const double got = std::abs(weyl_average(p, 200000, shifts[i]));
    CHECK(std::abs(got - want[i]) < kOracleTol);
    CHECK(got < kDefaultWeylTol);
  }
}

TEST_CASE("constant and alternating sequences") {
  const Angle theta = A("1/7 + b2");
  const auto z = weyl_average(PolyAngle({theta}), 5000, 123);
  CHECK(std::abs(z - to_unit(theta)) < 1e-12);
  CHECK(std::abs(weyl_average(Poly("1/2*C(n,1)"), 10000, 0)) < 1e-12);
  CHECK(std::abs(weyl_average(Poly("1/3*C(n,1)"), 300000, 0)) < 1e-10);
}

TEST_CASE("thread count does not change the bits") {
  const PolyAngle p = Poly("b1*C(n,2) + 1/3*b2*C(n,3)");
  const auto one = weyl_average(p, 50000, 77);
  for (unsigned t : {2u, 3u, 8u}) {
    const auto z = weyl_average(p, 50000, 77, t);
    CHECK(z.real() == one.real());
    CHECK(z.imag() == one.imag());
  }
}

TEST_CASE("shifting the polynomial matches shifting the range") {
  const PolyAngle p = Poly("1/5 + b1*C(n,2) - 2/7*b2*C(n,3)");
  for (long k : {1L, 1000L, 1000000000L}) {
    const auto a = weyl_average(p, 20000, k);
    const auto b = weyl_average(p.shifted(k), 20000, 0);
    CHECK(std::abs(a - b) < 1e-12);
  }
}

TEST_CASE("periods and limits") {
  CHECK(rational_period(Poly("1/3*C(n,1)")) == 3);
  CHECK(rational_period(Poly("1/3*C(n,2)")) == 6);
  CHECK(rational_period(Poly("b1")) == 1);
  CHECK_THROWS_AS(rational_period(Poly("b1*C(n,1)")), UnsupportedError);

  CHECK(limit_average(Poly("b1*C(n,2)")) == std::complex<double>(0, 0));
  CHECK(limit_average(Poly("b1 + 1/3*C(n,1)")) == std::complex<double>(0, 0));
  CHECK(limit_average(Poly("0")) == std::complex<double>(1, 0));
  // C(n,2)/3 over n = 0..5 hits 0 four times and 1/3 twice.
  const std::complex<double> mean = (4.0 + 2.0 * to_unit(A("1/3"))) / 6.0;
  CHECK(std::abs(limit_average(Poly("1/3*C(n,2)")) - mean) < 1e-15);
  CHECK(std::abs(limit_average(Poly("b1 + 1/3*C(n,2)")) - mean * to_unit(A("b1"))) < 1e-15);
  CHECK_THROWS_AS(limit_average(Poly("1/10000019*C(n,1) + 1/3*C(n,2)")), UnsupportedError);
}

TEST_CASE("rational averages at multiples of the period") {
  for (const char *text : {"1/3*C(n,2)", "1/4 + 1/5*C(n,1) + 1/6*C(n,3)", "2/7*C(n,2)"}) {
    const PolyAngle p = Poly(text);
    const std::uint64_t t = rational_period(p).get_ui();
    const auto target = limit_average(p);
    for (long k : {0L, 13L, 1000000L})
      CHECK(std::abs(weyl_average(p, 600 * t, k) - target) < 1e-10);
  }
}

TEST_CASE("reports") {
  const auto rep = equidistribution_report(Poly("b1*C(n,2)"), 200000,
                                           {0, 1000, 1000000, 1000000000}, kDefaultWeylTol);
  CHECK(rep.pass);
  CHECK(rep.averages.size() == 4);
  CHECK(rep.max_abs < 0.0023);
  CHECK(rep.target == std::complex<double>(0, 0));
  CHECK_FALSE(equidistribution_report(Poly("b1*C(n,2)"), 1000, {0}, kDefaultWeylTol).pass);
  const auto ones = equidistribution_report(Poly("0"), 10, {0}, 1e-12);
  CHECK(ones.pass);
  CHECK(ones.target == std::complex<double>(1, 0));
  CHECK_THROWS_AS(equidistribution_report(Poly("b1"), 10, {0}, 0.0), ConfigError);
  CHECK_THROWS_AS(equidistribution_report(Poly("b1"), 0, {0}, 0.1), ConfigError);
  CHECK_THROWS_AS(equidistribution_report(Poly("b1"), 10, {-1}, 0.1), ConfigError);
}

TEST_CASE("unique ergodicity along orbits") {
  const std::vector<mpz_class> shifts = {0, 1000, 1000000, 1000000000};
  const auto r1 = unique_ergodicity_check(BasicSystem{1, A("b1")}, CharacterIndex::unit(1),
                                          P("1/3"), 200000, shifts, kDefaultWeylTol);
  CHECK(r1.pass);
  const auto r2 = unique_ergodicity_check(BasicSystem{2, A("b1")}, CharacterIndex::unit(2),
                                          P("0, 0"), 200000, shifts, kDefaultWeylTol);
  CHECK(r2.pass);
  // Torsion rotation: C(n,2)/5 has period 10 and a nonzero mean.
  const auto r3 = unique_ergodicity_check(BasicSystem{2, A("1/5")}, CharacterIndex::unit(2),
                                          P("0, 0"), 100000, shifts, 1e-10);
  const std::complex<double> mean =
      (4.0 + 4.0 * to_unit(A("1/5")) + 2.0 * to_unit(A("3/5"))) / 10.0;
  CHECK(std::abs(r3.target - mean) < 1e-15);
  CHECK(std::abs(r3.target) > 0.1);
  CHECK(r3.pass);
  CHECK_THROWS_AS(unique_ergodicity_check(BasicSystem{2, A("b1")}, CharacterIndex{}, P("0, 0"),
                                          1000, shifts, 0.1),
                  DegenerateError);
}
