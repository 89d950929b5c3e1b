#include "gpl/embedding.hpp"

#include <algorithm>
#include <map>

namespace gpl {

namespace {

bool is_invariant(const RatFunc& h, const FiniteMoebiusGroup& g) {
  for (const auto& m : g.elements())
    if (!(h.compose(m.pullback()) == h)) return false;
  return true;
}

bool candidate_ok(const RatFunc& h, const FiniteMoebiusGroup& g) {
  if (h.is_constant()) return false;
  if (h.map_degree() != std::int64_t(g.size())) return false;
  return is_invariant(h, g);
}

} // namespace

RatFunc invariant_generator(const FiniteMoebiusGroup& g) {
  if (g.size() < 2) raise(Errc::ConfigError, "invariant generator needs |G| >= 2");
  const FieldPtr& f = g.field();

  RatFunc sum = RatFunc::constant(f->zero());
  RatFunc sum_sq = RatFunc::constant(f->zero());
  RatFunc prod = RatFunc::constant(f->one());
  for (const auto& m : g.elements()) {
    RatFunc pb = m.pullback();
    sum = sum + pb;
    sum_sq = sum_sq + pb * pb;
    prod = prod * pb;
  }

  for (const RatFunc* h : {&sum, &sum_sq, &prod})
    if (candidate_ok(*h, g)) return *h;
  raise(Errc::NoGeneratorFound, "sum, sum of squares and product all degenerate");
}

bool pole_divisor_matches(const RatFunc& f, const Divisor& expected) {
  const FieldPtr& k = f.field();
  Poly den_expected(k, {k->one()});
  std::int64_t inf_mult = 0;
  for (const auto& [p, m] : expected.terms()) {
    if (m < 0) return false;
    if (p.is_infinity()) {
      inf_mult = m;
      continue;
    }
    FieldElem t0 = p.affine_coord();
    for (std::int64_t i = 0; i < m; ++i) den_expected = den_expected * Poly(k, {-t0, k->one()});
  }
  if (!(f.den() == den_expected)) return false; // reduced den is monic already
  std::int64_t gap = f.num().degree() - f.den().degree();
  return std::max<std::int64_t>(gap, 0) == inf_mult;
}

RatFunc pole_align(const RatFunc& h, const FiniteMoebiusGroup& g, const ProjPoint& p) {
  Divisor orbit = orbit_sum(g, p);
  if (orbit.support_size() != g.size())
    raise(Errc::NonFreeOrbit, "orbit of " + p.str() + " has size " +
                                  std::to_string(orbit.support_size()) + " < |G| = " +
                                  std::to_string(g.size()));
  ProjPoint value = ratfunc_value(h, p);
  RatFunc f = h;
  if (!value.is_infinity()) {
    RatFunc shifted = h - RatFunc::constant(value.affine_coord());
    f = RatFunc::constant(h.field()->one()) / shifted;
  }
  if (!pole_divisor_matches(f, orbit))
    raise(Errc::PoleMismatch, "pole divisor differs from the orbit of " + p.str());
  return f;
}

std::array<Poly, 3> build_map(const RatFunc& f, const RatFunc& g, const Divisor& d) {
  const Poly& df = f.den();
  const Poly& dg = g.den();
  Poly common = Poly::gcd(df, dg);
  Poly q, r;
  Poly::divmod(dg, common, q, r);
  if (!r.is_zero()) raise(Errc::Internal, "lcm computation failed");
  Poly lcm = df * q; // monic * monic with monic gcd
  Poly::divmod(lcm, df, q, r);
  Poly f0 = f.num() * q;
  Poly::divmod(lcm, dg, q, r);
  Poly f1 = g.num() * q;
  Poly f2 = lcm;

  Poly triple_gcd = Poly::gcd(Poly::gcd(f0, f1), f2);
  if (triple_gcd.degree() > 0)
    raise(Errc::BasePointFound,
          "common factor " + triple_gcd.str() + " (base point of the linear system)");

  int n = std::max({f0.degree(), f1.degree(), f2.degree()});
  if (n != d.degree())
    raise(Errc::DegreeMismatch, "parametrization degree " + std::to_string(n) +
                                    " != deg D = " + std::to_string(d.degree()));
  return {f0, f1, f2};
}

BiPoly implicitize(const RatFunc& f, const RatFunc& g) {
  if (f.is_constant() || g.is_constant())
    raise(Errc::ConstantFunction, "implicitize needs nonconstant coordinates");
  const FieldPtr& k = f.field();
  BiPoly x = BiPoly::var_x(k), y = BiPoly::var_y(k);

  int ma = std::max(f.num().degree(), f.den().degree());
  int mb = std::max(g.num().degree(), g.den().degree());
  std::vector<BiPoly> a, b;
  for (int i = 0; i <= ma; ++i)
    a.push_back(BiPoly::constant(f.num().coeff(i)) - x * BiPoly::constant(f.den().coeff(i)));
  for (int i = 0; i <= mb; ++i)
    b.push_back(BiPoly::constant(g.num().coeff(i)) - y * BiPoly::constant(g.den().coeff(i)));

  BiPoly res = resultant_in_t(a, b);
  if (res.is_zero())
    raise(Errc::DegreeMismatch, "resultant vanished identically");
  BiPoly curve = res.squarefree_part().normalized();

  if (!curve.substitute(f, g).is_zero())
    raise(Errc::Internal, "implicit equation does not vanish on the parametrization");
  if (curve.deg_y() != f.map_degree() || curve.deg_x() != g.map_degree())
    raise(Errc::DegreeMismatch,
          "parametrization is not birational onto its image (deg_y " +
              std::to_string(curve.deg_y()) + " vs " + std::to_string(f.map_degree()) +
              ", deg_x " + std::to_string(curve.deg_x()) + " vs " +
              std::to_string(g.map_degree()) + ")");
  return curve;
}

namespace {

// Fiber of h over h(s) as a monic polynomial identity: the affine part of the
// fiber divisor must be the orbit of s with uniform multiplicity, and the
// degree drop accounts for infinity.
bool fiber_equals_orbit_symbolic(const RatFunc& h, const FiniteMoebiusGroup& g,
                                 const ProjPoint& s) {
  const FieldPtr& k = h.field();
  ProjPoint v = ratfunc_value(h, s);
  Poly fiber_poly = v.is_infinity()
                        ? h.den()
                        : (h.num() - h.den().scaled(v.affine_coord()));
  if (fiber_poly.is_zero()) return false;
  std::vector<ProjPoint> orb = orbit_points(g, s);
  if (g.size() % orb.size() != 0) return false;
  std::int64_t mult = std::int64_t(g.size() / orb.size());
  Poly expected(k, {k->one()});
  bool has_inf = false;
  for (const auto& q : orb) {
    if (q.is_infinity()) {
      has_inf = true;
      continue;
    }
    for (std::int64_t i = 0; i < mult; ++i)
      expected = expected * Poly(k, {-q.affine_coord(), k->one()});
  }
  std::int64_t inf_mult = h.map_degree() - fiber_poly.degree();
  if (inf_mult != (has_inf ? mult : 0)) return false;
  return fiber_poly.monic() == expected;
}

bool fibers_equal_orbits_exhaustive(const RatFunc& h, const FiniteMoebiusGroup& g) {
  std::vector<ProjPoint> pts = projective_line(h.field());
  std::map<ProjPoint, std::vector<ProjPoint>> fibers;
  for (const auto& p : pts) fibers[ratfunc_value(h, p)].push_back(p);
  for (auto& [v, fiber] : fibers) {
    std::vector<ProjPoint> orb = orbit_points(g, fiber.front());
    std::sort(fiber.begin(), fiber.end());
    if (orb != fiber) return false;
  }
  return true;
}

} // namespace

GaloisCertificate verify_galois_projection(const RatFunc& coordinate,
                                           const FiniteMoebiusGroup& g) {
  GaloisCertificate cert;
  cert.group_order = g.size();
  cert.invariant = true;
  for (const auto& m : g.elements()) {
    if (!(coordinate.compose(m.pullback()) == coordinate)) {
      cert.invariant = false;
      cert.detail = "not invariant under " + m.str();
      break;
    }
  }
  if (coordinate.is_constant()) {
    cert.degree_matches = false;
    cert.detail = cert.detail.empty() ? "coordinate is constant" : cert.detail;
  } else {
    cert.map_deg = coordinate.map_degree();
    cert.degree_matches = (cert.map_deg == std::int64_t(g.size()));
    if (!cert.degree_matches && cert.detail.empty())
      cert.detail = "map degree " + std::to_string(cert.map_deg) + " != |G| = " +
                    std::to_string(g.size());
  }

  cert.fibers_match = false;
  if (cert.invariant && cert.degree_matches) {
    const FieldPtr& k = coordinate.field();
    if (k->is_finite()) {
      cert.fibers_match = fibers_equal_orbits_exhaustive(coordinate, g);
    } else {
      int found = 0;
      bool ok = true;
      for (std::int64_t n = 0; found < 3 && n < 64; ++n) {
        FieldElem t = k->from_int(n);
        if (coordinate.den().eval(t).is_zero()) continue;
        ++found;
        if (!fiber_equals_orbit_symbolic(coordinate, g, ProjPoint::affine(t))) {
          ok = false;
          break;
        }
      }
      cert.fibers_match = ok && found == 3;
    }
    if (!cert.fibers_match && cert.detail.empty()) cert.detail = "a fiber is not a single orbit";
  }

  cert.holds = cert.invariant && cert.degree_matches && cert.fibers_match;
  return cert;
}

ConstructionResult run_construction(const FiniteMoebiusGroup& g1, const FiniteMoebiusGroup& g2,
                                    const ProjPoint& p1, const ProjPoint& p2) {
  ConstructionResult out;
  out.report = criterion_report_rational(g1, g2, p1, p2);
  if (!out.report.all_hold()) return out;

  const Divisor& d = out.report.cond_c.witness;
  RatFunc h1 = invariant_generator(g1);
  RatFunc f = pole_align(h1, g1, p2); // (f)_inf = D - P1
  RatFunc h2 = invariant_generator(g2);
  RatFunc g = pole_align(h2, g2, p1); // (g)_inf = D - P2

  PlaneModel model;
  model.f = f;
  model.g = g;
  model.d = d;
  model.parametrization = build_map(f, g, d);
  model.implicit = implicitize(f, g);
  if (model.implicit.total_degree() != d.degree())
    raise(Errc::DegreeMismatch, "implicit curve degree " +
                                    std::to_string(model.implicit.total_degree()) +
                                    " != deg D = " + std::to_string(d.degree()));
  model.cert_f = verify_galois_projection(f, g1);
  model.cert_g = verify_galois_projection(g, g2);
  model.group1 = classify_group(g1);
  model.group2 = classify_group(g2);
  out.model = std::move(model);
  return out;
}

} // namespace gpl
