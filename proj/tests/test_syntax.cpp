#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewtorus/errors.hpp"
#include "skewtorus/syntax.hpp"
#include "support.hpp"

using namespace skewtorus;
using namespace skewtorus::testing;

namespace {

std::size_t offset_of(const char *text) {
  try {
    (void)parse_poly(text, default_ctx()->basis);
  } catch (const ParseError &e) {
    return e.offset();
  }
  FAIL("no parse error for " << text);
  return 0;
}

} // namespace

TEST_CASE("angles") {
  const auto basis = default_ctx()->basis;
  const Angle a = A("1/3 + 1/2*b1");
  CHECK(a.rat() == mpq_class(1, 3));
  CHECK(a.coeff(0) == mpq_class(1, 2));
  CHECK(a.coeff(1) == 0);
  CHECK(A("-b2") == Angle::term(basis, 1, -1));
  CHECK(A("2*3/4") == A("1/2"));
  CHECK(A("b1*1/2") == A("1/2*b1"));
  CHECK(A("  1/6 -  b1 + 2/4 ") == A("2/3 - b1"));
  CHECK(A("0").is_zero());
  CHECK(A("7/7").is_zero());
}

TEST_CASE("format round-trips") {
  for (const char *text : {"0", "1/3", "1/2*b1", "1/3 + 1/2*b1 - 2*b2", "5/6 - 1/720*b2"}) {
    const Angle a = A(text);
    CHECK(A(format_angle(a).c_str()) == a);
  }
  CHECK(format_angle(A("1/3 + 1/2*b1 - 2*b2")) == "1/3 + 1/2*b1 - 2*b2");
  CHECK(format_angle(A("-1/2*b1")) == "-1/2*b1");
  CHECK(format_angle(Angle()) == "0");
}

TEST_CASE("points") {
  const TorusPoint p = P("0, 1/2*b1,1/3");
  REQUIRE(p.size() == 3);
  CHECK(p[0].is_zero());
  CHECK(p[1] == A("1/2*b1"));
  CHECK(P(format_point(p).c_str()) == p);
}

TEST_CASE("binomial-basis polynomials") {
  const PolyAngle p = Poly("1/5 + b1*C(n,1) + 1/2*b1*C(n,2)");
  REQUIRE(p.degree() == 2);
  CHECK(p.coeff(0) == A("1/5"));
  CHECK(p.coeff(1) == A("b1"));
  CHECK(p.coeff(2) == A("1/2*b1"));
  CHECK(Poly("C(n,3) - C(n,3)").is_zero());
  CHECK(Poly(format_poly(p).c_str()) == p);
  CHECK(Poly("b1*C(n,2) + b2*C(n,2)") == Poly("C(n , 2)*b2 + b1*C(n,2)"));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK(offset_of("1/3 + ") == 6);
  CHECK(offset_of("1/0") == 2);
  CHECK(offset_of("1/3 + b7") == 6);
  CHECK(offset_of("b1*b2") == 3);
  CHECK(offset_of("1 ? 2") == 2);
  CHECK(offset_of("C(m,2)") == 2);
  CHECK(offset_of("C(n,65)") == 4);
  CHECK(offset_of("C(n,1)*C(n,2)") == 7);
  CHECK(offset_of("") == 0);
  CHECK_THROWS_AS(parse_angle("C(n,1)", default_ctx()->basis), ParseError);
  try {
    (void)parse_point("1/2, 1/3 + x", default_ctx()->basis);
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.offset() == 11);
  }
}
