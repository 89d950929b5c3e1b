#include <doctest.h>

#include "gpl/elliptic.hpp"
#include "gpl/matrix.hpp"

using namespace gpl;

TEST_CASE("curve enumeration over F_19 and F_13") {
  FermatCurve e19 = FermatCurve::create(19);
  CHECK(e19.points().size() == 27);
  CHECK(e19.omega() == 7);
  CHECK(e19.on_curve(e19.canonical(1, 4, 5))); // 1 + 64 + 125 = 190 = 10 * 19

  FermatCurve e13 = FermatCurve::create(13);
  CHECK(e13.points().size() == 9);
  for (const auto& p : e13.points()) CHECK((p.x == 0 || p.y == 0 || p.z == 0));
}

TEST_CASE("bad characteristics are rejected") {
  CHECK_THROWS_AS(FermatCurve::create(3), Error);
  CHECK_THROWS_AS(FermatCurve::create(5), Error);  // 5 = 2 mod 3
  CHECK_THROWS_AS(FermatCurve::create(17), Error); // 17 = 2 mod 3
  CHECK_THROWS_AS(FermatCurve::create(21), Error); // not prime
}

TEST_CASE("chord-tangent group law: identity and inverses") {
  FermatCurve e = FermatCurve::create(19);
  CubicPoint o = e.origin();
  CHECK(e.on_curve(o));
  for (const auto& p : e.points()) {
    CHECK(e.add(o, p) == p);
    CHECK(e.add(p, o) == p);
    CHECK(e.add(p, e.neg(p)) == o);
  }
}

TEST_CASE("group law is commutative and associative over all of E(F_19)") {
  FermatCurve e = FermatCurve::create(19);
  const auto& pts = e.points();
  std::size_t n = pts.size();
  // exhaustive via the index table
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i][j] = e.index_of(e.add(pts[i], pts[j]));
  std::size_t bad_comm = 0, bad_assoc = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (table[i][j] != table[j][i]) ++bad_comm;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (table[std::size_t(table[i][j])][k] != table[i][std::size_t(table[j][k])]) ++bad_assoc;
  CHECK(bad_comm == 0);
  CHECK(bad_assoc == 0);
}

TEST_CASE("coordinate scaling has order three and fixes X = 0") {
  FermatCurve e = FermatCurve::create(19);
  CubicPoint q = e.canonical(1, 4, 5);
  CHECK(e.sigma(q, 1) == e.canonical(7, 4, 5));
  CubicPoint fixed = e.canonical(0, -1, 1);
  CHECK(e.sigma(fixed, 1) == fixed);
  for (const auto& p : e.points()) CHECK(e.sigma(e.sigma(e.sigma(p, 1), 1), 1) == p);
  CHECK(FermatCurve::fixed_count(e.sigma_perm(1)) == 3);
}

TEST_CASE("the group-law involution swaps Q and sigma(Q)") {
  FermatCurve e = FermatCurve::create(19);
  CubicPoint q = e.canonical(1, 4, 5);
  CHECK(e.eta(q, q) == e.sigma(q, 1));
  CHECK(e.eta(e.sigma(q, 1), q) == q);
  for (const auto& p : e.points()) CHECK(e.eta(e.eta(p, q), q) == p);
}

TEST_CASE("quotient genus by Riemann-Hurwitz") {
  CHECK(quotient_genus(3, 3) == 0);
  CHECK(quotient_genus(3, 0) == 1);
  CHECK(quotient_genus(2, 4) == 0);
  CHECK_THROWS_AS(quotient_genus(3, 1), Error); // non-integer genus
  CHECK_THROWS_AS(quotient_genus(2, 8), Error); // negative genus
  CHECK_THROWS_AS(quotient_genus(4, 2), Error); // non-prime order
}

TEST_CASE("inadmissible base points are rejected") {
  FermatCurve e = FermatCurve::create(19);
  CHECK_THROWS_AS(verify_elliptic_criterion(e, e.canonical(0, -1, 1)), Error); // scaling-fixed
  // a point with Y = 0: z^3 = -1 has roots; (1:0:z)
  CubicPoint yzero{};
  bool found = false;
  for (const auto& p : e.points())
    if (p.y == 0) {
      yzero = p;
      found = true;
      break;
    }
  REQUIRE(found);
  CHECK_THROWS_AS(verify_elliptic_criterion(e, yzero), Error);
}

TEST_CASE("the scan finds (1:4:5) first and its certificate is complete") {
  FermatCurve e = FermatCurve::create(19);
  EllipticScan scan = scan_elliptic_criterion(e);
  CHECK(scan.cert.q == e.canonical(1, 4, 5));
  const EllipticCertificate& c = scan.cert;
  CHECK(c.all_hold());
  CHECK(c.tau_order_three);
  CHECK(c.tau_maps_q_to_sigma_q);
  CHECK(c.sigma_fixed == 3);
  CHECK(c.tau_fixed == 3);
  CHECK(c.degree_d == 4);
  CHECK(c.degree_d == 1 + 3); // 1 + |<sigma>|

  // the divisor is Q + sQ + s2Q + t2Q as a multiset
  EllDivisor expected;
  expected.add(c.q, 1);
  expected.add(c.sigma_q, 1);
  expected.add(c.sigma2_q, 1);
  expected.add(c.tau2_q, 1);
  CHECK(c.divisor_d == expected);
}

TEST_CASE("quartic model: poles, invariance, fit") {
  FermatCurve e = FermatCurve::create(19);
  EllipticCertificate cert = scan_elliptic_criterion(e).cert;
  QuarticModel m = build_quartic_model(e, cert);
  CHECK(m.f_poles.size() == 3);
  CHECK(m.g_poles.size() == 3);
  CHECK(m.image.size() == 23); // 27 points minus the 4 distinct poles
  CHECK(m.quartic.total_degree() == 4);

  // oracle: rebuild the interpolation matrix and recheck the kernel is a line
  FieldPtr fp = Field::prime(19);
  std::vector<std::pair<int, int>> monos;
  for (int tot = 0; tot <= 4; ++tot)
    for (int i = 0; i <= tot; ++i) monos.push_back({i, tot - i});
  ExactMatrix mat(fp, m.image.size(), monos.size());
  for (std::size_t r = 0; r < m.image.size(); ++r)
    for (std::size_t c = 0; c < monos.size(); ++c)
      mat.at(r, c) = fp->from_int(m.image[r][0]).pow(monos[c].first) *
                     fp->from_int(m.image[r][1]).pow(monos[c].second);
  CHECK(kernel(mat).size() == 1);

  for (const auto& pt : m.image)
    CHECK(m.quartic.eval(fp->from_int(pt[0]), fp->from_int(pt[1])).is_zero());
}

TEST_CASE("outer witnesses at the three coordinate vertices") {
  FermatCurve e = FermatCurve::create(19);
  OuterDeltaReport rep = outer_delta_check(e);
  CHECK(rep.all_hold());
  // fibers: 8 free orbits of size 3 plus 3 fixed points
  for (const auto& c : rep.at_vertex) CHECK(c.fiber_count == 11);
}

TEST_CASE("a curve point used as center fails the fiber-orbit test") {
  FermatCurve e = FermatCurve::create(19);
  CubicPoint interior = e.canonical(0, -1, 1);
  REQUIRE(e.on_curve(interior));
  ProjectionCheck check = projection_orbit_check(e, interior, 0);
  CHECK_FALSE(check.fibers_are_orbits);
}
