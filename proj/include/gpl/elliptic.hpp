#pragma once

// The Fermat cubic X^3 + Y^3 + Z^3 = 0 over a prime field F_p with p = 1 mod 3:
// chord-tangent group law with inflection origin (1 : -1 : 0), the coordinate
// scaling of order three, the involution built from the group law, and the
// degree-4 plane model fitted by interpolation.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gpl/bipoly.hpp"
#include "gpl/matrix.hpp"
#include "gpl/projective.hpp"

namespace gpl {

struct CubicPoint {
  std::int64_t x = 0, y = 0, z = 0; // canonical: first nonzero coordinate is 1

  auto operator<=>(const CubicPoint&) const = default;
  std::string str() const {
    return "(" + std::to_string(x) + " : " + std::to_string(y) + " : " + std::to_string(z) + ")";
  }
};

using EllDivisor = FormalSum<CubicPoint>;

class FermatCurve {
public:
  // Requires p prime, p != 3, p = 1 mod 3 (so a primitive cube root of unity
  // exists); throws BadCharacteristic otherwise.
  static FermatCurve create(std::int64_t p);

  std::int64_t p() const { return p_; }
  std::int64_t omega() const { return omega_; } // smallest root of x^2 + x + 1

  const std::vector<CubicPoint>& points() const { return pts_; }
  int index_of(const CubicPoint& pt) const; // -1 when not on the curve
  bool on_curve(const CubicPoint& pt) const;
  CubicPoint canonical(std::int64_t x, std::int64_t y, std::int64_t z) const;

  CubicPoint origin() const { return canonical(1, -1, 0); }
  // Third intersection of the line through a and b (tangent when a == b).
  CubicPoint third_intersection(const CubicPoint& a, const CubicPoint& b) const;
  CubicPoint add(const CubicPoint& a, const CubicPoint& b) const;
  CubicPoint neg(const CubicPoint& a) const;
  CubicPoint sub(const CubicPoint& a, const CubicPoint& b) const;

  CubicPoint sigma(const CubicPoint& a, int power = 1) const; // (w^power X : Y : Z)
  // The involution P -> (Q + sigma(Q)) - P; eta(Q) = sigma(Q) by construction.
  CubicPoint eta(const CubicPoint& a, const CubicPoint& q) const;

  // Automorphisms as permutations of points() indices.
  using Perm = std::vector<std::int32_t>;
  Perm identity_perm() const;
  Perm sigma_perm(int power = 1) const;
  Perm eta_perm(const CubicPoint& q) const;
  static Perm compose(const Perm& f, const Perm& g); // f after g
  static std::int64_t perm_order(const Perm& f, std::int64_t cap = 64);
  static std::int64_t fixed_count(const Perm& f);
  CubicPoint apply(const Perm& f, const CubicPoint& pt) const;

private:
  std::int64_t p_ = 0, omega_ = 0;
  std::vector<CubicPoint> pts_;
  std::map<CubicPoint, int> index_;

  std::int64_t norm(std::int64_t v) const;
  std::int64_t mul(std::int64_t a, std::int64_t b) const;
  std::int64_t invmod(std::int64_t a) const;
  std::int64_t cubic_form(std::int64_t x, std::int64_t y, std::int64_t z) const;
};

// Genus of the quotient of a genus-1 curve by a prime-order automorphism with
// the given number of fixed points (Riemann-Hurwitz); throws
// InconsistentRamification when the data is impossible.
std::int64_t quotient_genus(std::int64_t order, std::int64_t fixed_count);

struct EllipticCertificate {
  std::int64_t p = 0, omega = 0;
  CubicPoint q, sigma_q, sigma2_q, tau_q, tau2_q; // P1 = tau2_q, P2 = sigma2_q
  FermatCurve::Perm sigma, tau, eta;
  bool tau_order_three = false;
  bool tau_maps_q_to_sigma_q = false;
  bool p1_ne_p2 = false;
  std::int64_t sigma_fixed = 0, tau_fixed = 0;
  bool cond_a_sigma = false, cond_a_tau = false;
  bool groups_intersect_trivially = false;
  EllDivisor divisor_d;
  bool divisor_identity = false;
  std::int64_t degree_d = 0;

  bool all_hold() const {
    return tau_order_three && tau_maps_q_to_sigma_q && p1_ne_p2 && cond_a_sigma && cond_a_tau &&
           groups_intersect_trivially && divisor_identity && degree_d == 4;
  }
};

// Runs the order/fixed-point/intersection/divisor checks for one base point;
// throws HypothesisViolated when q is inadmissible and DegenerateQ when
// sigma^2(q) == tau^2(q) over this field (retry with another q).
EllipticCertificate verify_elliptic_criterion(const FermatCurve& curve, const CubicPoint& q);

struct EllipticScan {
  EllipticCertificate cert;       // first fully passing certificate
  std::vector<CubicPoint> tried;  // admissible points attempted, in order
};

// Scans admissible base points in enumeration order; throws DegenerateQ when
// none passes.
EllipticScan scan_elliptic_criterion(const FermatCurve& curve);

struct QuarticModel {
  CubicPoint p1, p2;
  std::int64_t f_pole_value = 0; // c with f = 1/(y - c), y = Y/Z
  std::vector<int> f_poles, g_poles;          // point indices
  std::vector<std::array<std::int64_t, 2>> image; // (f, g) at points off the poles
  BiPoly quartic; // normalized degree-4 curve through the image
};

QuarticModel build_quartic_model(const FermatCurve& curve, const EllipticCertificate& cert);

struct ProjectionCheck {
  bool commutes = false;         // projection constant on scaling orbits
  bool fibers_are_orbits = false;
  std::size_t fiber_count = 0;
};

// Galois witness for projecting from `center` against the order-3 scaling of
// `scaling_axis` (0, 1 or 2): the projection must be constant on orbits and
// its fibers over F_p must be exactly the orbits.
ProjectionCheck projection_orbit_check(const FermatCurve& curve, const CubicPoint& center,
                                       int scaling_axis);

struct OuterDeltaReport {
  std::array<ProjectionCheck, 3> at_vertex; // centers (1:0:0), (0:1:0), (0:0:1)
  bool all_hold() const {
    for (const auto& c : at_vertex)
      if (!(c.commutes && c.fibers_are_orbits)) return false;
    return true;
  }
};

// Witness check that each coordinate vertex is an outer Galois point; this
// certifies Galois-ness of the three projections, not completeness of the set.
OuterDeltaReport outer_delta_check(const FermatCurve& curve);

} // namespace gpl
