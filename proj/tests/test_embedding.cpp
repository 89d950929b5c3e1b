#include <doctest.h>

#include "gpl/embedding.hpp"

using namespace gpl;

namespace {

const FieldPtr& Q() {
  static const FieldPtr q = Field::rationals();
  return q;
}

ProjPoint pt(std::int64_t a, std::int64_t b) {
  return ProjPoint(Q()->from_int(a), Q()->from_int(b));
}

FiniteMoebiusGroup g_sigma() {
  return FiniteMoebiusGroup::generate({Moebius::from_ints(Q(), 1, -1, 1, 1)});
}

FiniteMoebiusGroup g_tau() {
  return FiniteMoebiusGroup::generate(
      {Moebius(Q()->zero(), Q()->one(), Q()->parse("-1/2"), Q()->one())});
}

RatFunc rf(std::initializer_list<std::int64_t> num, std::initializer_list<std::int64_t> den) {
  return RatFunc::reduce(Poly::from_ints(Q(), num), Poly::from_ints(Q(), den));
}

} // namespace

TEST_CASE("invariant generator for the order-4 rotation") {
  RatFunc h = invariant_generator(g_sigma());
  CHECK(h == rf({1, 0, -6, 0, 1}, {0, -1, 0, 1}));
}

TEST_CASE("invariant generator falls back when the pullback sum degenerates") {
  // G = {t, -t}: the sum vanishes, the sum of squares 2t^2 works
  FiniteMoebiusGroup g = FiniteMoebiusGroup::generate({Moebius::from_ints(Q(), -1, 0, 0, 1)});
  RatFunc h = invariant_generator(g);
  CHECK(h == rf({0, 0, 2}, {1}));
}

TEST_CASE("invariant generator for the second order-4 group") {
  // oracle: independent symbolic summation of the four pullbacks
  // t, 2/(2-t), (t-2)/(t-1), (2t-2)/t
  RatFunc expected = rf({0, 1}, {1}) + rf({2}, {2, -1}) + rf({-2, 1}, {-1, 1}) + rf({-2, 2}, {0, 1});
  CHECK(expected == rf({-4, 16, -12, 0, 1}, {0, 2, -3, 1}));
  RatFunc h = invariant_generator(g_tau());
  CHECK(h == expected);
}

TEST_CASE("pole alignment keeps the generator when the point is already a pole") {
  RatFunc h = invariant_generator(g_sigma());
  RatFunc f = pole_align(h, g_sigma(), pt(-1, 1)); // denominator vanishes at -1
  CHECK(f == h);
}

TEST_CASE("pole alignment inverts a shifted generator otherwise") {
  // h = t^2 is invariant for {t, -t}; the orbit of 1 is {1, -1}
  FiniteMoebiusGroup g = FiniteMoebiusGroup::generate({Moebius::from_ints(Q(), -1, 0, 0, 1)});
  RatFunc h = rf({0, 0, 1}, {1});
  RatFunc f = pole_align(h, g, pt(1, 1));
  CHECK(f == rf({1}, {-1, 0, 1}));
}

TEST_CASE("pole alignment for the second group puts poles on the orbit of (2:1)") {
  RatFunc g = pole_align(invariant_generator(g_tau()), g_tau(), pt(2, 1));
  CHECK(g == rf({-4, 16, -12, 0, 1}, {0, 2, -3, 1}));
  Divisor orb = orbit_sum(g_tau(), pt(2, 1));
  CHECK(pole_divisor_matches(g, orb));
  // poles are exactly {0, 1, 2, infinity}
  for (auto p : {pt(0, 1), pt(1, 1), pt(2, 1)}) CHECK(orb.coeff(p) == 1);
  CHECK(orb.coeff(ProjPoint::infinity(Q())) == 1);
}

TEST_CASE("pole alignment rejects non-free orbits") {
  FiniteMoebiusGroup g = FiniteMoebiusGroup::generate({Moebius::from_ints(Q(), -1, 0, 0, 1)});
  RatFunc h = rf({0, 0, 1}, {1});
  CHECK_THROWS_AS(pole_align(h, g, pt(0, 1)), Error); // 0 is a fixed point
}

TEST_CASE("pole divisor matching is exact") {
  RatFunc f = rf({1}, {-1, 0, 1}); // poles 1, -1
  Divisor d;
  d.add(pt(1, 1), 1);
  d.add(pt(-1, 1), 1);
  CHECK(pole_divisor_matches(f, d));
  d.add(pt(0, 1), 1);
  CHECK_FALSE(pole_divisor_matches(f, d));
}

TEST_CASE("build_map clears denominators to a coprime triple") {
  RatFunc f = RatFunc::var(Q());
  RatFunc g = rf({0, 0, 1}, {1});
  Divisor d;
  d.add(ProjPoint::infinity(Q()), 2);
  auto triple = build_map(f, g, d);
  CHECK(triple[0] == Poly::from_ints(Q(), {0, 1}));
  CHECK(triple[1] == Poly::from_ints(Q(), {0, 0, 1}));
  CHECK(triple[2] == Poly::from_ints(Q(), {1}));
}

TEST_CASE("build_map flags a degree disagreement") {
  RatFunc f = RatFunc::var(Q());
  RatFunc g = rf({0, 0, 1}, {1});
  Divisor d;
  d.add(ProjPoint::infinity(Q()), 3);
  CHECK_THROWS_AS(build_map(f, g, d), Error);
}

TEST_CASE("implicitize the circle parametrization") {
  RatFunc f = rf({1, 0, -1}, {1, 0, 1});
  RatFunc g = rf({0, 2}, {1, 0, 1});
  BiPoly curve = implicitize(f, g);
  // normalized so the constant term is 1: 1 - X^2 - Y^2
  BiPoly x = BiPoly::var_x(Q()), y = BiPoly::var_y(Q());
  CHECK(curve == BiPoly::constant(Q()->one()) - x * x - y * y);
  CHECK(curve.substitute(f, g).is_zero());
}

TEST_CASE("implicitize the identity pair gives the diagonal line, no error") {
  BiPoly curve = implicitize(RatFunc::var(Q()), RatFunc::var(Q()));
  CHECK(curve.total_degree() == 1);
  BiPoly x = BiPoly::var_x(Q()), y = BiPoly::var_y(Q());
  CHECK(curve == (y - x).normalized());
}

TEST_CASE("implicitize detects a non-birational parametrization") {
  RatFunc t2 = rf({0, 0, 1}, {1});
  CHECK_THROWS_AS(implicitize(t2, t2), Error); // both factor through t^2
}

TEST_CASE("galois projection certificate holds for the constructed coordinate") {
  RatFunc f = pole_align(invariant_generator(g_sigma()), g_sigma(), pt(-1, 1));
  GaloisCertificate cert = verify_galois_projection(f, g_sigma());
  CHECK(cert.holds);
  CHECK(cert.map_deg == 4);
  CHECK(cert.group_order == 4);
}

TEST_CASE("galois projection fails for the identity chart") {
  GaloisCertificate cert = verify_galois_projection(RatFunc::var(Q()), g_sigma());
  CHECK_FALSE(cert.holds);
  CHECK_FALSE(cert.invariant);
}

TEST_CASE("galois projection over a finite field checks fibers exhaustively") {
  FieldPtr f13 = Field::prime(13);
  FiniteMoebiusGroup g = FiniteMoebiusGroup::generate({Moebius::from_ints(f13, 1, -1, 1, 1)});
  RatFunc h = invariant_generator(g);
  GaloisCertificate cert = verify_galois_projection(h, g);
  CHECK(cert.holds);
}

TEST_CASE("order-5 coordinate certifies with group order 5") {
  FieldPtr k = Field::extension(Q(), {Q()->from_int(-1), Q()->one(), Q()->one()});
  FieldElem a = k->generator();
  FiniteMoebiusGroup g1 =
      FiniteMoebiusGroup::generate({Moebius(k->one(), -k->one(), k->one(), -a)});
  ProjPoint p2(k->one(), k->one() + a);
  RatFunc f = pole_align(invariant_generator(g1), g1, p2);
  GaloisCertificate cert = verify_galois_projection(f, g1);
  CHECK(cert.holds);
  CHECK(cert.map_deg == 5);
}

TEST_CASE("run_construction assembles the full order-4 model") {
  ConstructionResult r = run_construction(g_sigma(), g_tau(), pt(2, 1), pt(-1, 1));
  REQUIRE(r.report.all_hold());
  REQUIRE(r.model.has_value());
  const PlaneModel& m = *r.model;
  CHECK(m.f == rf({1, 0, -6, 0, 1}, {0, -1, 0, 1}));
  CHECK(m.implicit.total_degree() == 5);
  CHECK(m.implicit.substitute(m.f, m.g).is_zero());
  CHECK(m.cert_f.holds);
  CHECK(m.cert_g.holds);
  CHECK(m.group1.label == "Z/4");
  CHECK(m.group2.label == "Z/4");
  // pole divisors: (f) at D - P1, (g) at D - P2
  Divisor df = m.d;
  df.add(pt(2, 1), -1);
  CHECK(pole_divisor_matches(m.f, df));
  Divisor dg = m.d;
  dg.add(pt(-1, 1), -1);
  CHECK(pole_divisor_matches(m.g, dg));
}

TEST_CASE("run_construction mixes cyclic and Klein groups") {
  Moebius sa = Moebius::from_ints(Q(), 0, 2, 1, 0);
  Moebius ta(Q()->from_int(-1), Q()->one(), Q()->parse("-1/2"), Q()->one());
  FiniteMoebiusGroup klein = FiniteMoebiusGroup::generate({sa, ta});
  ConstructionResult r = run_construction(g_sigma(), klein, pt(2, 1), pt(-1, 1));
  REQUIRE(r.report.all_hold());
  REQUIRE(r.model.has_value());
  CHECK(r.model->group1.label == "Z/4");
  CHECK(r.model->group2.label == "(Z/2)^2");
  CHECK(r.model->implicit.total_degree() == 5);
}

TEST_CASE("run_construction stops at a violated condition (b)") {
  ConstructionResult r = run_construction(g_sigma(), g_sigma(), pt(2, 1), pt(-1, 1));
  CHECK_FALSE(r.report.cond_b.holds);
  CHECK_FALSE(r.model.has_value());
  CHECK_FALSE(r.report.cond_b.shared_element.empty());
}
