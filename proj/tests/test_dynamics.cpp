#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewtorus/combinatorics.hpp"
#include "skewtorus/dynamics.hpp"
#include "skewtorus/errors.hpp"
#include "skewtorus/sampling.hpp"
#include "support.hpp"

using namespace skewtorus;
using namespace skewtorus::testing;

TEST_CASE("step") {
  const BasicSystem sys{2, A("b1")};
  CHECK(step(sys, P("1/3, b2")) == P("1/3 + b1, 1/3 + b2"));
  CHECK(step(sys, P("0, 0")) == P("b1, 0"));
  const TorusPoint x = P("1/7 - 2*b2, 5/6*b1");
  CHECK(inverse_step(sys, step(sys, x)) == x);
  CHECK(step(sys, inverse_step(sys, x)) == x);
  CHECK_THROWS_AS(step(sys, P("0")), ConfigError);
  CHECK_THROWS_AS(check_system(BasicSystem{0, Angle()}), ConfigError);
}

TEST_CASE("closed-form iterate") {
  const Angle a = A("b1 + 1/9");
  const BasicSystem sys{2, a};
  const TorusPoint x = P("1/4 - b2, 2/3*b1");
  CHECK(iterate_closed(sys, x, 0) == x);
  CHECK(iterate_closed(sys, x, -1) == inverse_step(sys, x));
  for (long n : {-13L, -2L, 1L, 3L, 50L}) {
    const TorusPoint want({n * a + x[0], binom(n, 2) * a + n * x[0] + x[1]});
    CHECK(iterate_closed(sys, x, n) == want);
  }
  CHECK(iterate_closed(BasicSystem{2, A("b1")}, P("0,0"), 3) == P("3*b1, 3*b1"));
  const mpz_class huge("123456789012345678901234567890");
  const TorusPoint far = iterate_closed(sys, x, huge);
  CHECK(far[0] == huge * a + x[0]);
}

TEST_CASE("closed form matches stepping") {
  Sampler s(11, default_ctx());
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 1 + trial % 5;
    const BasicSystem sys{m, s.angle()};
    const TorusPoint x = s.point(static_cast<std::size_t>(m));
    for (long n = -12; n <= 12; ++n)
      CHECK(iterate_closed(sys, x, n) == iterate_stepping(sys, x, n));
  }
}

TEST_CASE("ambient form") {
  const TorusPoint g = P("b1, 1/3, b2");
  const TorusPoint r = iterate_ambient(g, 4);
  CHECK(r[0] == g[0]);
  CHECK(r[1] == 4 * g[0] + g[1]);
  CHECK(r[2] == 6 * g[0] + 4 * g[1] + g[2]);
}

TEST_CASE("characters") {
  const TorusPoint x = P("1/4, 1/3");
  CHECK(character_eval(CharacterIndex::unit(1), P("1/5, b2")) == A("1/5"));
  CHECK(character_eval(CharacterIndex{}, x).is_zero());
  CHECK(character_eval(CharacterIndex{{{1, 2}, {2, -1}}}, x) == A("1/6"));
  CHECK(CharacterIndex{{{1, 0}, {3, 2}}}.top() == 3);
  CHECK(CharacterIndex{{{2, 0}}}.is_zero());
}

TEST_CASE("orbit polynomials") {
  const Angle a = A("b1");
  const BasicSystem sys{2, a};
  const TorusPoint x = P("1/3, b2");
  const PolyAngle p1 = orbit_polynomial(sys, CharacterIndex::unit(1), x);
  CHECK(p1 == PolyAngle({x[0], a}));
  const PolyAngle p2 = orbit_polynomial(sys, CharacterIndex::unit(2), x);
  CHECK(p2 == PolyAngle({x[1], x[0], a}));
  CHECK(orbit_polynomial(sys, CharacterIndex{}, x).is_zero());
  const CharacterIndex v{{{1, 3}, {2, -2}}};
  const PolyAngle p = orbit_polynomial(sys, v, x);
  for (long n = -10; n <= 10; ++n)
    CHECK(p(n) == character_eval(v, iterate_closed(sys, x, n)));
}

TEST_CASE("differences") {
  CHECK(PolyAngle({A("1/3")}).difference().is_zero());
  CHECK(PolyAngle({A("1/3"), A("b1")}).difference() == PolyAngle({A("b1")}));
  CHECK(PolyAngle({A("1/3"), A("b1"), A("b2")}).difference() == PolyAngle({A("b1"), A("b2")}));
  const PolyAngle p = Poly("1/5 + b1*C(n,1) + 2/3*b2*C(n,3)");
  for (long n = -6; n <= 6; ++n)
    CHECK(p.difference()(n) == p(n + 1) - p(n));
  CHECK(p.difference().degree() == p.degree() - 1);
}

TEST_CASE("shifted polynomials") {
  const PolyAngle p = Poly("1/5 + b1*C(n,1) + 2/3*b2*C(n,3)");
  for (long k : {-3L, 0L, 7L})
    for (long n = -5; n <= 5; ++n)
      CHECK(p.shifted(k)(n) == p(n + k));
}

TEST_CASE("diagonal representation") {
  const BasicSystem sys{3, A("b1")};
  CHECK(diagonal_representation(sys, CharacterIndex{}).empty());
  const auto c1 = diagonal_representation(sys, CharacterIndex::unit(1));
  REQUIRE(c1.size() == 1);
  const auto c2 = diagonal_representation(sys, CharacterIndex::unit(2));
  REQUIRE(c2.size() == 2);
  CHECK(c2[1].v == CharacterIndex::unit(2).v);
  CHECK(diagonal_relation_holds(sys, c2, P("1/3, b2, 1/7")));
  CHECK_THROWS_AS(diagonal_representation(sys, CharacterIndex{{{1, 1}, {2, 1}}}),
                  UnsupportedError);
}

TEST_CASE("quasi-eigenfunctions") {
  const auto ctx = default_ctx();
  const std::vector<Angle> constant = {A("1/3 + b1"), Angle(), Angle()};
  Sampler s(12, ctx);
  const HmElement phi = s.element(2);
  CHECK(q_eval(constant, phi) == A("1/3 + b1"));
  const std::vector<Angle> v = {A("1/720"), A("5/720*b1"), A("1/2 - 7/720*b2")};
  for (long n : {-3L, 0L, 4L})
    CHECK(q_eval(v, HmElement::tilde(n, 2, ctx)) == v[0] + n * v[1] + binom(n, 2) * v[2]);
  std::vector<Angle> sv = shift(v);
  CHECK(sv[0] == v[1]);
  CHECK(sv[2].is_zero());
  for (std::size_t k = 0; k < v.size(); ++k)
    sv[k] += v[k];
  CHECK(q_eval(v, star(HmElement::tilde(1, 2, ctx), phi)) == q_eval(sv, phi));
  CHECK_THROWS_AS(q_eval({Angle(), Angle(), Angle(), A("1/2")}, phi), ConfigError);
}

TEST_CASE("minimality") {
  CHECK(is_minimal(BasicSystem{2, A("b1")}));
  CHECK_FALSE(is_minimal(BasicSystem{2, A("1/5")}));
  CHECK_FALSE(is_minimal(BasicSystem{2, Angle()}));
}
