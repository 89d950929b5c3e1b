#pragma once

// Decision procedures for the two-Galois-point criterion: quotient condition
// (a), trivial-intersection condition (b), the inner divisor identity (c) and
// its outer variant, plus brute-force witness search.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gpl/projective.hpp"

namespace gpl {

struct CondResultA {
  bool holds = false;
  std::string justification;
};

struct CondResultB {
  bool holds = false;
  std::size_t intersection_size = 0;
  std::string shared_element; // a nontrivial common element, when one exists
};

struct CondResultC {
  bool holds = false;
  Divisor witness; // D when the identity holds
  Divisor lhs, rhs;
  std::string note;
};

struct CriterionReport {
  CondResultA cond_a;
  CondResultB cond_b;
  CondResultC cond_c;
  std::int64_t degree_d = -1;

  bool all_hold() const { return cond_a.holds && cond_b.holds && cond_c.holds; }
};

// Genus-0 curves: any finite quotient of a rational curve is rational, so the
// condition is automatic.  Genus >= 2 is unsupported.
CondResultA check_a(int genus, const FiniteMoebiusGroup& g);

// Genus-1 curves, decided by Riemann-Hurwitz from the order and the number of
// fixed points of a prime-order automorphism.
CondResultA check_a_genus1(std::int64_t order, std::int64_t fixed_count);

CondResultB check_b(const FiniteMoebiusGroup& g1, const FiniteMoebiusGroup& g2);

// P1 + sum_{g in G1} g(P2) == P2 + sum_{g in G2} g(P1) as divisors.  P1 == P2
// is reported as a failure, not an error.
CondResultC check_c_inner(const FiniteMoebiusGroup& g1, const FiniteMoebiusGroup& g2,
                          const ProjPoint& p1, const ProjPoint& p2);

// Outer variant: sum_{g in G1} g(Q) == sum_{g in G2} g(Q).
CondResultC check_c_outer(const FiniteMoebiusGroup& g1, const FiniteMoebiusGroup& g2,
                          const ProjPoint& q);

struct InnerWitness {
  ProjPoint p1, p2;
  Divisor d;
};

// All ordered pairs of distinct candidates satisfying the inner identity, in
// candidate order.
std::vector<InnerWitness> search_inner(const FiniteMoebiusGroup& g1,
                                       const FiniteMoebiusGroup& g2,
                                       const std::vector<ProjPoint>& candidates);

struct OuterWitness {
  ProjPoint q;
  Divisor d;
};

std::vector<OuterWitness> search_outer(const FiniteMoebiusGroup& g1,
                                       const FiniteMoebiusGroup& g2,
                                       const std::vector<ProjPoint>& candidates);

// Full genus-0 inner report: conditions (a), (b), (c) and deg D.
CriterionReport criterion_report_rational(const FiniteMoebiusGroup& g1,
                                          const FiniteMoebiusGroup& g2, const ProjPoint& p1,
                                          const ProjPoint& p2);

} // namespace gpl
