#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewtorus/combinatorics.hpp"
#include "skewtorus/dynamics.hpp"
#include "skewtorus/ellis.hpp"
#include "skewtorus/errors.hpp"
#include "skewtorus/sampling.hpp"
#include "support.hpp"

#include <stdexcept>

using namespace skewtorus;
using namespace skewtorus::testing;

namespace {

TruncEndo pw(long n) { return TruncEndo::power(n, default_ctx()); }

TruncEndo zero_with_image(const Angle &b1_image) {
  return TruncEndo(default_ctx(), 0, {b1_image, Angle()});
}

} // namespace

TEST_CASE("membership") {
  const auto ctx = default_ctx();
  CHECK(HmElement::validate({pw(1), pw(0), pw(0), pw(0)}, ctx, 3) == HmElement::identity(3, ctx));
  for (long n : {-9L, -1L, 2L, 5L}) {
    std::vector<TruncEndo> comps;
    for (int k = 0; k <= 4; ++k)
      comps.push_back(TruncEndo::power(binom(n, k), ctx));
    CHECK(HmElement::validate(comps, ctx, 4) == HmElement::tilde(n, 4, ctx));
  }
  try {
    (void)HmElement::validate({pw(1), pw(0), pw(1)}, ctx, 2);
    FAIL("expected a membership error");
  } catch (const MembershipError &e) {
    CHECK(e.index() == 2);
  }
  try {
    (void)HmElement::validate({pw(2), pw(0), pw(0)}, ctx, 2);
    FAIL("expected a membership error");
  } catch (const MembershipError &e) {
    CHECK(e.index() == 0);
  }
  // 2 * 360 == 0 mod 720, so this residue is allowed.
  CHECK_NOTHROW(HmElement::validate({pw(1), pw(0), pw(360)}, ctx, 2));
  CHECK_THROWS_AS(HmElement::validate({pw(1), pw(0)}, ctx, 2), ConfigError);
  CHECK_THROWS_AS(HmElement::validate({pw(1), pw(0)}, ctx, 7), ConfigError);
}

TEST_CASE("iterates") {
  const auto ctx = default_ctx();
  const HmElement one = HmElement::tilde(1, 3, ctx);
  CHECK(one[1] == pw(1));
  CHECK(one[2] == pw(0));
  CHECK(one[3] == pw(0));
  const HmElement minus = HmElement::tilde(-1, 4, ctx);
  for (int k = 0; k <= 4; ++k)
    CHECK(minus[k] == pw(k % 2 == 0 ? 1 : -1));
}

TEST_CASE("group law") {
  const auto ctx = default_ctx();
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      CHECK(star(HmElement::tilde(a, 4, ctx), HmElement::tilde(b, 4, ctx)) ==
            HmElement::tilde(a + b, 4, ctx));

  Sampler s(3, ctx);
  const TruncEndo alpha = s.endo_with_residue(4), beta = s.endo_with_residue(9);
  const HmElement pa = HmElement::validate({pw(1), alpha}, ctx, 1);
  const HmElement pb = HmElement::validate({pw(1), beta}, ctx, 1);
  CHECK(star(pa, pb) == HmElement::validate({pw(1), alpha + beta}, ctx, 1));

  for (int i = 0; i < 20; ++i) {
    const HmElement phi = s.element(4);
    CHECK(star(phi, HmElement::identity(4, ctx)) == phi);
    CHECK(star(HmElement::identity(4, ctx), phi) == phi);
  }
}

TEST_CASE("inverse") {
  const auto ctx = default_ctx();
  for (long n : {-7L, 0L, 3L, 100L})
    CHECK(inverse(HmElement::tilde(n, 4, ctx)) == HmElement::tilde(-n, 4, ctx));
  CHECK(inverse(HmElement::identity(3, ctx)) == HmElement::identity(3, ctx));
  Sampler s(4, ctx);
  for (int i = 0; i < 30; ++i) {
    const HmElement psi = s.element(2);
    const HmElement inv = inverse(psi);
    CHECK(inv[1] == -psi[1]);
    CHECK(inv[2] == -psi[2] + compose(psi[1], psi[1]));
    CHECK(star(psi, inv) == HmElement::identity(2, ctx));
  }
}

TEST_CASE("commutators") {
  const auto ctx = default_ctx();
  Sampler s(5, ctx);
  for (int i = 0; i < 20; ++i) {
    const HmElement phi = s.element(4);
    CHECK(commutator(phi, phi) == HmElement::identity(4, ctx));
  }
  CHECK(commutator(HmElement::tilde(3, 4, ctx), HmElement::tilde(-8, 4, ctx)) ==
        HmElement::identity(4, ctx));

  // phi_1 trivial (k = 1): coordinates 1 and 2 vanish, coordinate 3 is
  // phi_2 o psi_1 - psi_1 o phi_2.
  for (int i = 0; i < 20; ++i) {
    const HmElement phi = s.element_trivial_prefix(4, 1);
    const HmElement psi = s.element(4);
    const HmElement c = commutator(phi, psi);
    CHECK(c[1].is_zero());
    CHECK(c[2].is_zero());
    CHECK(c[3] == compose(phi[2], psi[1]) - compose(psi[1], phi[2]));
    const HmElement pred = predicted_commutator(phi, psi, 1);
    CHECK(pred.m() == 3);
    CHECK(project(c, 3) == pred);
  }
  const HmElement nontrivial = HmElement::tilde(1, 4, ctx);
  CHECK_THROWS_AS(predicted_commutator(nontrivial, nontrivial, 1), std::domain_error);
  CHECK_NOTHROW(predicted_commutator(nontrivial, nontrivial, 0));
}

TEST_CASE("central level") {
  const auto ctx = default_ctx();
  CHECK(central_level(HmElement::identity(4, ctx)) == 4);
  CHECK(central_level(HmElement::tilde(1, 4, ctx)) == 0);
  const HmElement top = HmElement::validate(
      {pw(1), pw(0), pw(0), zero_with_image(A("1/720*b1"))}, ctx, 3);
  CHECK(central_level(top) == 2);
  Sampler s(6, ctx);
  CHECK(central_level(s.element_trivial_prefix(5, 2)) >= 2);
}

TEST_CASE("iterate detection") {
  const auto ctx = default_ctx();
  CHECK(iterate_index(HmElement::tilde(7, 3, ctx)) == mpz_class(7));
  CHECK(iterate_index(HmElement::tilde(-12, 3, ctx)) == mpz_class(-12));
  CHECK(iterate_index(HmElement::identity(3, ctx)) == mpz_class(0));
  const HmElement torsion_image =
      HmElement::validate({pw(1), zero_with_image(A("1/2")), pw(0)}, ctx, 2);
  CHECK_FALSE(iterate_index(torsion_image).has_value());
  // Agrees with 5~ in phi_1 but not in phi_2.
  const HmElement five = HmElement::tilde(5, 2, ctx);
  const HmElement off = HmElement::validate(
      {pw(1), pw(5), five[2] + zero_with_image(A("1/720*b1"))}, ctx, 2);
  CHECK_FALSE(iterate_index(off).has_value());
  const auto bare = make_context(6, nullptr);
  CHECK_THROWS_AS(iterate_index(HmElement::identity(2, bare)), ConfigError);
}

TEST_CASE("action on points") {
  const auto ctx = default_ctx();
  const TorusPoint x = P("1/720*b1, 3/720, 5/720*b2 + 1/6");
  CHECK(act(HmElement::identity(2, ctx), x) == x);
  const BasicSystem sys{2, x[0]};
  const TorusPoint tail({x[1], x[2]});
  for (long n : {-4L, 0L, 1L, 9L}) {
    const TorusPoint got = act(HmElement::tilde(n, 2, ctx), x);
    CHECK(got[0] == x[0]);
    CHECK(TorusPoint({got[1], got[2]}) == iterate_closed(sys, tail, n));
  }
  Sampler s(7, ctx);
  for (int i = 0; i < 20; ++i) {
    const HmElement phi = s.element(3), psi = s.element(3);
    const TorusPoint y = s.point(4);
    CHECK(act(star(phi, psi), y) == act(phi, act(psi, y)));
  }
  CHECK_THROWS_AS(act(HmElement::identity(2, ctx), P("0, 0")), ConfigError);
  CHECK_THROWS_AS(act(HmElement::tilde(1, 2, ctx), P("1/1440, 0, 0")), TruncationError);
}

TEST_CASE("twisted product") {
  const auto ctx = default_ctx();
  const HmElement id = HmElement::identity(2, ctx);
  const Angle x0 = A("1/720*b1");
  CHECK(ast({id, Angle()}, {id, Angle()}, x0) == AstElement{id, Angle()});
  CHECK(ast({id, A("1/3")}, {id, A("b2")}, x0) == AstElement{id, A("1/3 + b2")});
  Sampler s(8, ctx);
  for (int i = 0; i < 20; ++i) {
    const AstElement a{s.element(2), s.angle()}, b{s.element(2), s.angle()},
        c{s.element(2), s.angle()};
    CHECK(ast(ast(a, b, x0), c, x0) == ast(a, ast(b, c, x0), x0));
  }
}
