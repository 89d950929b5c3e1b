#include "gpl/elliptic.hpp"

#include <algorithm>

namespace gpl {

namespace {

bool is_prime_i64(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
  while (newr != 0) {
    std::int64_t q = r / newr, tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) raise(Errc::DivisionByZero, "non-invertible residue");
  return ((t % p) + p) % p;
}

} // namespace

std::int64_t FermatCurve::norm(std::int64_t v) const {
  std::int64_t r = v % p_;
  return r < 0 ? r + p_ : r;
}

std::int64_t FermatCurve::mul(std::int64_t a, std::int64_t b) const {
  return std::int64_t((__int128(a) * b) % p_);
}

std::int64_t FermatCurve::invmod(std::int64_t a) const { return inv_mod(a, p_); }

std::int64_t FermatCurve::cubic_form(std::int64_t x, std::int64_t y, std::int64_t z) const {
  return norm(mul(mul(x, x), x) + mul(mul(y, y), y) + mul(mul(z, z), z));
}

FermatCurve FermatCurve::create(std::int64_t p) {
  if (!is_prime_i64(p) || p == 3 || p % 3 != 1)
    raise(Errc::BadCharacteristic,
          "need a prime p = 1 mod 3, p != 3, got " + std::to_string(p));
  FermatCurve c;
  c.p_ = p;
  c.omega_ = 0;
  for (std::int64_t w = 2; w < p; ++w)
    if ((w * w + w + 1) % p == 0) {
      c.omega_ = w;
      break;
    }
  if (c.omega_ == 0) raise(Errc::Internal, "no cube root of unity found");

  // Points with X != 0 first (normalized X = 1), then X = 0; coordinates
  // ascending, so the scan order of base points is deterministic.
  for (std::int64_t y = 0; y < p; ++y)
    for (std::int64_t z = 0; z < p; ++z)
      if (c.cubic_form(1, y, z) == 0) c.pts_.push_back({1, y, z});
  for (std::int64_t z = 0; z < p; ++z)
    if (c.cubic_form(0, 1, z) == 0) c.pts_.push_back({0, 1, z});
  // (0:0:1) is never on the curve.
  for (std::size_t i = 0; i < c.pts_.size(); ++i) c.index_[c.pts_[i]] = int(i);
  return c;
}

CubicPoint FermatCurve::canonical(std::int64_t x, std::int64_t y, std::int64_t z) const {
  std::int64_t cx = norm(x), cy = norm(y), cz = norm(z);
  if (cx == 0 && cy == 0 && cz == 0) raise(Errc::Internal, "(0:0:0) is not a point");
  std::int64_t lead = cx != 0 ? cx : (cy != 0 ? cy : cz);
  std::int64_t inv = invmod(lead);
  return {mul(cx, inv), mul(cy, inv), mul(cz, inv)};
}

bool FermatCurve::on_curve(const CubicPoint& pt) const {
  return cubic_form(pt.x, pt.y, pt.z) == 0;
}

int FermatCurve::index_of(const CubicPoint& pt) const {
  auto it = index_.find(pt);
  return it == index_.end() ? -1 : it->second;
}

CubicPoint FermatCurve::third_intersection(const CubicPoint& a, const CubicPoint& b) const {
  if (!(a == b)) {
    // F(sa + tb) = 3A s^2 t + 3B s t^2 on the curve; the third root is
    // (s : t) = (B : -A).
    std::int64_t A = norm(mul(mul(a.x, a.x), b.x) + mul(mul(a.y, a.y), b.y) +
                          mul(mul(a.z, a.z), b.z));
    std::int64_t B = norm(mul(a.x, mul(b.x, b.x)) + mul(a.y, mul(b.y, b.y)) +
                          mul(a.z, mul(b.z, b.z)));
    std::int64_t x = norm(mul(B, a.x) - mul(A, b.x));
    std::int64_t y = norm(mul(B, a.y) - mul(A, b.y));
    std::int64_t z = norm(mul(B, a.z) - mul(A, b.z));
    if (x == 0 && y == 0 && z == 0) raise(Errc::Internal, "degenerate chord");
    return canonical(x, y, z);
  }
  // Tangent line: pick a second point s on { grad . v = 0 }, then
  // F(sa + ts) = t^2 (3B s + F(s) t), so the third root is (F(s) : -3B).
  std::int64_t gx = mul(a.x, a.x), gy = mul(a.y, a.y), gz = mul(a.z, a.z);
  std::array<std::array<std::int64_t, 3>, 3> candidates = {{
      {norm(-gy), gx, 0},
      {norm(-gz), 0, gx},
      {0, norm(-gz), gy},
  }};
  CubicPoint s{};
  bool found = false;
  for (const auto& cand : candidates) {
    if (cand[0] == 0 && cand[1] == 0 && cand[2] == 0) continue;
    CubicPoint c = canonical(cand[0], cand[1], cand[2]);
    if (c == a) continue;
    s = c;
    found = true;
    break;
  }
  if (!found) raise(Errc::Internal, "no second point on the tangent line");
  std::int64_t B = norm(mul(a.x, mul(s.x, s.x)) + mul(a.y, mul(s.y, s.y)) +
                        mul(a.z, mul(s.z, s.z)));
  std::int64_t fs = cubic_form(s.x, s.y, s.z);
  std::int64_t coef_s = fs;
  std::int64_t coef_t = norm(-3 * B % p_);
  std::int64_t x = norm(mul(coef_s, a.x) + mul(coef_t, s.x));
  std::int64_t y = norm(mul(coef_s, a.y) + mul(coef_t, s.y));
  std::int64_t z = norm(mul(coef_s, a.z) + mul(coef_t, s.z));
  if (x == 0 && y == 0 && z == 0) raise(Errc::Internal, "degenerate tangent");
  return canonical(x, y, z);
}

CubicPoint FermatCurve::add(const CubicPoint& a, const CubicPoint& b) const {
  return third_intersection(origin(), third_intersection(a, b));
}

CubicPoint FermatCurve::neg(const CubicPoint& a) const {
  return third_intersection(origin(), a);
}

CubicPoint FermatCurve::sub(const CubicPoint& a, const CubicPoint& b) const {
  return add(a, neg(b));
}

CubicPoint FermatCurve::sigma(const CubicPoint& a, int power) const {
  std::int64_t w = 1;
  for (int i = 0; i < ((power % 3) + 3) % 3; ++i) w = mul(w, omega_);
  return canonical(mul(w, a.x), a.y, a.z);
}

CubicPoint FermatCurve::eta(const CubicPoint& a, const CubicPoint& q) const {
  CubicPoint s = add(q, sigma(q, 1));
  return sub(s, a);
}

FermatCurve::Perm FermatCurve::identity_perm() const {
  Perm f(pts_.size());
  for (std::size_t i = 0; i < pts_.size(); ++i) f[i] = std::int32_t(i);
  return f;
}

FermatCurve::Perm FermatCurve::sigma_perm(int power) const {
  Perm f(pts_.size());
  for (std::size_t i = 0; i < pts_.size(); ++i) f[i] = std::int32_t(index_of(sigma(pts_[i], power)));
  return f;
}

FermatCurve::Perm FermatCurve::eta_perm(const CubicPoint& q) const {
  Perm f(pts_.size());
  for (std::size_t i = 0; i < pts_.size(); ++i) f[i] = std::int32_t(index_of(eta(pts_[i], q)));
  return f;
}

FermatCurve::Perm FermatCurve::compose(const Perm& f, const Perm& g) {
  Perm r(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) r[i] = f[std::size_t(g[i])];
  return r;
}

std::int64_t FermatCurve::perm_order(const Perm& f, std::int64_t cap) {
  Perm id(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) id[i] = std::int32_t(i);
  Perm acc = f;
  for (std::int64_t n = 1; n <= cap; ++n) {
    if (acc == id) return n;
    acc = compose(f, acc);
  }
  raise(Errc::CapExceeded, "permutation order exceeds cap");
}

std::int64_t FermatCurve::fixed_count(const Perm& f) {
  std::int64_t n = 0;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (f[i] == std::int32_t(i)) ++n;
  return n;
}

CubicPoint FermatCurve::apply(const Perm& f, const CubicPoint& pt) const {
  int i = index_of(pt);
  if (i < 0) raise(Errc::Internal, "point not on the curve");
  return pts_[std::size_t(f[std::size_t(i)])];
}

std::int64_t quotient_genus(std::int64_t order, std::int64_t fixed_count) {
  if (order < 2 || !is_prime_i64(order))
    raise(Errc::InconsistentRamification, "automorphism order must be prime");
  if (fixed_count < 0) raise(Errc::InconsistentRamification, "negative fixed-point count");
  // 0 = order * (2g' - 2) + fixed * (order - 1)  =>  g' = 1 - fixed(order-1)/(2 order)
  std::int64_t num = fixed_count * (order - 1);
  if (num % (2 * order) != 0)
    raise(Errc::InconsistentRamification,
          "Riemann-Hurwitz gives a non-integer genus for order " + std::to_string(order) +
              " with " + std::to_string(fixed_count) + " fixed points");
  std::int64_t g = 1 - num / (2 * order);
  if (g < 0)
    raise(Errc::InconsistentRamification, "Riemann-Hurwitz gives negative genus");
  return g;
}

EllipticCertificate verify_elliptic_criterion(const FermatCurve& curve, const CubicPoint& q) {
  if (!curve.on_curve(q)) raise(Errc::HypothesisViolated, q.str() + " is not on the curve");
  if (q.y == 0 || q.z == 0)
    raise(Errc::HypothesisViolated, q.str() + " lies on YZ = 0");
  if (q.x == 0)
    raise(Errc::HypothesisViolated, q.str() + " is fixed by the coordinate scaling");

  EllipticCertificate cert;
  cert.p = curve.p();
  cert.omega = curve.omega();
  cert.q = q;
  cert.sigma_q = curve.sigma(q, 1);
  cert.sigma2_q = curve.sigma(q, 2);

  cert.sigma = curve.sigma_perm(1);
  cert.eta = curve.eta_perm(q);
  FermatCurve::Perm sigma2 = curve.sigma_perm(2);
  cert.tau = FermatCurve::compose(cert.eta, FermatCurve::compose(sigma2, cert.eta));

  cert.tau_q = curve.apply(cert.tau, q);
  cert.tau2_q = curve.apply(cert.tau, cert.tau_q);
  if (cert.tau2_q == cert.sigma2_q)
    raise(Errc::DegenerateQ, "sigma^2(Q) == tau^2(Q) for Q = " + q.str());

  cert.p1_ne_p2 = true;
  cert.tau_order_three = (FermatCurve::perm_order(cert.tau) == 3);
  cert.tau_maps_q_to_sigma_q = (cert.tau_q == cert.sigma_q);

  cert.sigma_fixed = FermatCurve::fixed_count(cert.sigma);
  cert.tau_fixed = FermatCurve::fixed_count(cert.tau);
  cert.cond_a_sigma = (quotient_genus(3, cert.sigma_fixed) == 0);
  cert.cond_a_tau = (quotient_genus(3, cert.tau_fixed) == 0);

  // <sigma> and <tau> intersect trivially iff no nontrivial powers coincide
  // as point maps.
  FermatCurve::Perm tau2 = FermatCurve::compose(cert.tau, cert.tau);
  cert.groups_intersect_trivially =
      !(cert.sigma == cert.tau) && !(cert.sigma == tau2) && !(sigma2 == cert.tau) &&
      !(sigma2 == tau2);

  // P1 + sum sigma^i(P2) == P2 + sum tau^i(P1), both equal Q + sQ + s2Q + t2Q.
  CubicPoint p1 = cert.tau2_q, p2 = cert.sigma2_q;
  EllDivisor lhs, rhs;
  lhs.add(p1, 1);
  rhs.add(p2, 1);
  CubicPoint a = p2, b = p1;
  for (int i = 0; i < 3; ++i) {
    lhs.add(a, 1);
    rhs.add(b, 1);
    a = curve.apply(cert.sigma, a);
    b = curve.apply(cert.tau, b);
  }
  cert.divisor_identity = (lhs == rhs);
  cert.divisor_d = lhs;
  cert.degree_d = lhs.degree();
  return cert;
}

EllipticScan scan_elliptic_criterion(const FermatCurve& curve) {
  EllipticScan scan;
  for (const auto& q : curve.points()) {
    if (q.x == 0 || q.y == 0 || q.z == 0) continue;
    scan.tried.push_back(q);
    try {
      EllipticCertificate cert = verify_elliptic_criterion(curve, q);
      if (cert.all_hold()) {
        scan.cert = std::move(cert);
        return scan;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::DegenerateQ) throw;
    }
  }
  raise(Errc::DegenerateQ, "no admissible base point passes over F_" + std::to_string(curve.p()));
}

QuarticModel build_quartic_model(const FermatCurve& curve, const EllipticCertificate& cert) {
  const std::int64_t p = curve.p();
  QuarticModel model;
  model.p1 = cert.tau2_q;
  model.p2 = cert.sigma2_q;

  // y = Y/Z as a value in P^1, infinity encoded as nullopt.
  auto y_of = [&](const CubicPoint& pt) -> std::optional<std::int64_t> {
    if (pt.z == 0) return std::nullopt;
    return std::int64_t((__int128(pt.y) * inv_mod(pt.z, p)) % p);
  };

  // 1/(v - c) with v in F_p u {inf}: infinity maps to 0, v == c to a pole.
  auto invert_shift = [&](std::optional<std::int64_t> v, std::int64_t c)
      -> std::optional<std::int64_t> {
    if (!v.has_value()) return 0;
    std::int64_t w = ((*v - c) % p + p) % p;
    if (w == 0) return std::nullopt;
    return inv_mod(w, p);
  };

  auto c_f = y_of(model.p2);
  if (!c_f.has_value()) raise(Errc::Internal, "P2 on Z = 0");
  model.f_pole_value = *c_f;
  // g pins the pullback of y through eta at P1; eta(P1) = P2, so the shift
  // value coincides with f's.
  CubicPoint eta_p1 = curve.apply(cert.eta, model.p1);
  auto c_g = y_of(eta_p1);
  if (!c_g.has_value()) raise(Errc::Internal, "eta(P1) on Z = 0");

  const auto& pts = curve.points();
  std::vector<std::optional<std::int64_t>> fval(pts.size()), gval(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    fval[i] = invert_shift(y_of(pts[i]), *c_f);
    CubicPoint ei = curve.apply(cert.eta, pts[i]);
    gval[i] = invert_shift(y_of(ei), *c_g);
  }

  // Invariance: f on sigma-orbits, g on tau-orbits.
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::size_t si = std::size_t(cert.sigma[i]);
    std::size_t ti = std::size_t(cert.tau[i]);
    if (fval[i] != fval[si] || gval[i] != gval[ti])
      raise(Errc::PoleVerificationFailed, "coordinate not constant on orbits");
  }

  // Pole sets: f on the sigma-orbit of P2, g on the tau-orbit of P1.
  EllDivisor f_poles_expected, g_poles_expected;
  CubicPoint a = model.p2, b = model.p1;
  for (int i = 0; i < 3; ++i) {
    f_poles_expected.add(a, 1);
    g_poles_expected.add(b, 1);
    a = curve.apply(cert.sigma, a);
    b = curve.apply(cert.tau, b);
  }
  EllDivisor f_poles_actual, g_poles_actual;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!fval[i].has_value()) {
      f_poles_actual.add(pts[i], 1);
      model.f_poles.push_back(int(i));
    }
    if (!gval[i].has_value()) {
      g_poles_actual.add(pts[i], 1);
      model.g_poles.push_back(int(i));
    }
  }
  if (!(f_poles_actual == f_poles_expected) || !(g_poles_actual == g_poles_expected))
    raise(Errc::PoleVerificationFailed, "pole set is not the expected orbit");

  for (std::size_t i = 0; i < pts.size(); ++i)
    if (fval[i].has_value() && gval[i].has_value())
      model.image.push_back({*fval[i], *gval[i]});

  // Fit a quartic through the image: kernel of the 15-column monomial matrix.
  FieldPtr fp = Field::prime(p);
  std::vector<std::pair<int, int>> monos;
  for (int total = 0; total <= 4; ++total)
    for (int i = 0; i <= total; ++i) monos.push_back({i, total - i});
  ExactMatrix m(fp, model.image.size(), monos.size());
  for (std::size_t r = 0; r < model.image.size(); ++r) {
    FieldElem xv = fp->from_int(model.image[r][0]);
    FieldElem yv = fp->from_int(model.image[r][1]);
    for (std::size_t c = 0; c < monos.size(); ++c)
      m.at(r, c) = xv.pow(monos[c].first) * yv.pow(monos[c].second);
  }
  auto basis = kernel(m);
  if (basis.size() != 1)
    raise(Errc::FitFailed, "kernel dimension " + std::to_string(basis.size()) +
                               " != 1; increase p");
  BiPoly quartic(fp);
  for (std::size_t c = 0; c < monos.size(); ++c)
    quartic.set_coeff(monos[c].first, monos[c].second, basis[0][c]);
  if (quartic.total_degree() != 4)
    raise(Errc::FitFailed, "fitted curve has degree " + std::to_string(quartic.total_degree()));
  model.quartic = quartic.normalized();

  for (const auto& pt : model.image)
    if (!model.quartic.eval(fp->from_int(pt[0]), fp->from_int(pt[1])).is_zero())
      raise(Errc::Internal, "fitted quartic does not vanish on an image point");
  return model;
}

ProjectionCheck projection_orbit_check(const FermatCurve& curve, const CubicPoint& center,
                                       int scaling_axis) {
  const std::int64_t p = curve.p();
  // Two independent linear forms vanishing at the center.
  std::array<std::int64_t, 3> c = {center.x, center.y, center.z};
  std::vector<std::array<std::int64_t, 3>> forms;
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (auto [i, j] : pairs) {
    std::array<std::int64_t, 3> f = {0, 0, 0};
    f[std::size_t(i)] = c[std::size_t(j)];
    f[std::size_t(j)] = ((p - c[std::size_t(i)]) % p);
    if (f[0] == 0 && f[1] == 0 && f[2] == 0) continue;
    // keep only forms independent of those already chosen
    bool indep = true;
    for (const auto& g : forms) {
      // 2x3 rank check via cross products
      if ((__int128(f[0]) * g[1] - __int128(f[1]) * g[0]) % p == 0 &&
          (__int128(f[0]) * g[2] - __int128(f[2]) * g[0]) % p == 0 &&
          (__int128(f[1]) * g[2] - __int128(f[2]) * g[1]) % p == 0)
        indep = false;
    }
    if (indep) forms.push_back(f);
    if (forms.size() == 2) break;
  }
  if (forms.size() != 2) raise(Errc::Internal, "could not build the projection");

  auto project = [&](const CubicPoint& pt) -> std::pair<std::int64_t, std::int64_t> {
    auto dot = [&](const std::array<std::int64_t, 3>& f) {
      return std::int64_t((__int128(f[0]) * pt.x + __int128(f[1]) * pt.y +
                           __int128(f[2]) * pt.z) %
                          p);
    };
    std::int64_t u = ((dot(forms[0]) % p) + p) % p, v = ((dot(forms[1]) % p) + p) % p;
    // canonical representative of (u : v)
    if (u != 0) return {1, std::int64_t((__int128(v) * inv_mod(u, p)) % p)};
    return {0, 1};
  };

  FermatCurve::Perm scal(curve.points().size());
  {
    std::int64_t w = curve.omega();
    for (std::size_t i = 0; i < curve.points().size(); ++i) {
      CubicPoint pt = curve.points()[i];
      std::array<std::int64_t, 3> v = {pt.x, pt.y, pt.z};
      v[std::size_t(scaling_axis)] = std::int64_t((__int128(w) * v[std::size_t(scaling_axis)]) % p);
      scal[i] = std::int32_t(curve.index_of(curve.canonical(v[0], v[1], v[2])));
    }
  }

  ProjectionCheck check;
  check.commutes = true;
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<int>> fibers;
  for (std::size_t i = 0; i < curve.points().size(); ++i) {
    const CubicPoint& pt = curve.points()[i];
    if (pt == center) continue; // projection undefined at its own center
    auto pi = project(pt);
    CubicPoint im = curve.points()[std::size_t(scal[i])];
    if (!(im == center) && project(im) != pi) check.commutes = false;
    fibers[pi].push_back(int(i));
  }
  check.fiber_count = fibers.size();
  check.fibers_are_orbits = true;
  for (auto& [pi, fiber] : fibers) {
    std::vector<int> orbit;
    int j = fiber.front();
    for (int step = 0; step < 3; ++step) {
      if (std::find(orbit.begin(), orbit.end(), j) == orbit.end()) orbit.push_back(j);
      j = scal[std::size_t(j)];
    }
    std::sort(orbit.begin(), orbit.end());
    std::sort(fiber.begin(), fiber.end());
    if (orbit != fiber) check.fibers_are_orbits = false;
  }
  return check;
}

OuterDeltaReport outer_delta_check(const FermatCurve& curve) {
  OuterDeltaReport rep;
  rep.at_vertex[0] = projection_orbit_check(curve, {1, 0, 0}, 0);
  rep.at_vertex[1] = projection_orbit_check(curve, {0, 1, 0}, 1);
  rep.at_vertex[2] = projection_orbit_check(curve, {0, 0, 1}, 2);
  return rep;
}

} // namespace gpl
