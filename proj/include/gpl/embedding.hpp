#pragma once

// Constructive side for genus 0: invariant generators with prescribed pole
// divisors, the plane model (f : g : 1), its implicit equation, and Galois
// certificates for both projections.

#include <array>
#include <optional>

#include "gpl/bipoly.hpp"
#include "gpl/criterion.hpp"
#include "gpl/projective.hpp"

namespace gpl {

struct GaloisCertificate {
  bool holds = false;
  bool invariant = false;
  bool degree_matches = false;
  bool fibers_match = false;
  std::int64_t map_deg = -1; // -1 for constants
  std::size_t group_order = 0;
  std::string detail;
};

struct PlaneModel {
  RatFunc f, g;
  Divisor d;
  std::array<Poly, 3> parametrization; // coprime triple (F0 : F1 : F2)
  BiPoly implicit;
  GaloisCertificate cert_f, cert_g;
  GroupStructure group1, group2;
};

struct ConstructionResult {
  CriterionReport report;
  std::optional<PlaneModel> model; // present iff the criterion holds
};

// A generator of the G-invariant subfield: invariant of map degree |G|.
// Candidates tried in order: sum of the pullbacks, sum of their squares,
// their product; each is verified before being returned.
RatFunc invariant_generator(const FiniteMoebiusGroup& g);

// Moebius-adjusts an invariant generator so its pole divisor is exactly the
// orbit of p (which must be free): h itself if h(p) is infinite, otherwise
// 1/(h - h(p)).  The pole divisor is verified exactly.
RatFunc pole_align(const RatFunc& h, const FiniteMoebiusGroup& g, const ProjPoint& p);

// True iff the pole divisor of the reduced f equals `expected` exactly
// (denominator factorization against the expected affine part plus the degree
// gap at infinity).
bool pole_divisor_matches(const RatFunc& f, const Divisor& expected);

// Clears denominators of (f : g : 1) to a coprime polynomial triple of max
// degree deg D and verifies base-point-freeness.
std::array<Poly, 3> build_map(const RatFunc& f, const RatFunc& g, const Divisor& d);

// Implicit equation of the image of t -> (f(t), g(t)): squarefree, normalized
// generator obtained from res_t(num_f - X den_f, num_g - Y den_g).  Raises
// DegreeMismatch when the parametrization is not birational onto its image.
BiPoly implicitize(const RatFunc& f, const RatFunc& g);

// Certifies that `coordinate` presents a Galois covering with group G:
// invariance under every element, map degree |G|, and fiber-equals-orbit
// (exhaustive over finite fields, three sample points otherwise).
GaloisCertificate verify_galois_projection(const RatFunc& coordinate,
                                           const FiniteMoebiusGroup& g);

// Full pipeline: criterion, generators, plane model, implicit curve and both
// certificates; stops at the criterion report if a condition fails.
ConstructionResult run_construction(const FiniteMoebiusGroup& g1, const FiniteMoebiusGroup& g2,
                                    const ProjPoint& p1, const ProjPoint& p2);

} // namespace gpl
