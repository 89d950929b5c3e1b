#include "gpl/criterion.hpp"

#include "gpl/elliptic.hpp"

namespace gpl {

CondResultA check_a(int genus, const FiniteMoebiusGroup& g) {
  (void)g;
  if (genus >= 2) raise(Errc::UnsupportedGenus, "genus " + std::to_string(genus));
  if (genus == 1)
    raise(Errc::ConfigError, "genus-1 quotients need automorphism fixed-point data");
  return {true, "automatic: a finite quotient of a rational curve is rational (Lueroth)"};
}

CondResultA check_a_genus1(std::int64_t order, std::int64_t fixed_count) {
  std::int64_t q = quotient_genus(order, fixed_count);
  if (q == 0)
    return {true, "quotient genus 0 by Riemann-Hurwitz (order " + std::to_string(order) +
                      ", " + std::to_string(fixed_count) + " fixed points)"};
  return {false, "quotient genus " + std::to_string(q)};
}

CondResultB check_b(const FiniteMoebiusGroup& g1, const FiniteMoebiusGroup& g2) {
  FiniteMoebiusGroup inter = FiniteMoebiusGroup::intersect(g1, g2);
  CondResultB r;
  r.holds = inter.size() == 1;
  r.intersection_size = inter.size();
  if (!r.holds)
    for (const auto& m : inter.elements())
      if (!m.is_identity()) {
        r.shared_element = m.str();
        break;
      }
  return r;
}

CondResultC check_c_inner(const FiniteMoebiusGroup& g1, const FiniteMoebiusGroup& g2,
                          const ProjPoint& p1, const ProjPoint& p2) {
  CondResultC r;
  r.lhs = orbit_sum(g1, p2);
  r.lhs.add(p1, 1);
  r.rhs = orbit_sum(g2, p1);
  r.rhs.add(p2, 1);
  if (p1 == p2) {
    r.holds = false;
    r.note = "P1 and P2 must be two different points";
    return r;
  }
  r.holds = (r.lhs == r.rhs);
  if (r.holds)
    r.witness = r.lhs;
  else
    r.note = "divisor mismatch";
  return r;
}

CondResultC check_c_outer(const FiniteMoebiusGroup& g1, const FiniteMoebiusGroup& g2,
                          const ProjPoint& q) {
  CondResultC r;
  r.lhs = orbit_sum(g1, q);
  r.rhs = orbit_sum(g2, q);
  r.holds = (r.lhs == r.rhs);
  if (r.holds)
    r.witness = r.lhs;
  else
    r.note = "orbit sums differ";
  return r;
}

std::vector<InnerWitness> search_inner(const FiniteMoebiusGroup& g1,
                                       const FiniteMoebiusGroup& g2,
                                       const std::vector<ProjPoint>& candidates) {
  std::vector<InnerWitness> hits;
  for (const auto& p1 : candidates)
    for (const auto& p2 : candidates) {
      if (p1 == p2) continue;
      CondResultC c = check_c_inner(g1, g2, p1, p2);
      if (c.holds) hits.push_back({p1, p2, c.witness});
    }
  return hits;
}

std::vector<OuterWitness> search_outer(const FiniteMoebiusGroup& g1,
                                       const FiniteMoebiusGroup& g2,
                                       const std::vector<ProjPoint>& candidates) {
  std::vector<OuterWitness> hits;
  for (const auto& q : candidates) {
    CondResultC c = check_c_outer(g1, g2, q);
    if (c.holds) hits.push_back({q, c.witness});
  }
  return hits;
}

CriterionReport criterion_report_rational(const FiniteMoebiusGroup& g1,
                                          const FiniteMoebiusGroup& g2, const ProjPoint& p1,
                                          const ProjPoint& p2) {
  CriterionReport rep;
  rep.cond_a = check_a(0, g1);
  rep.cond_b = check_b(g1, g2);
  rep.cond_c = check_c_inner(g1, g2, p1, p2);
  if (rep.cond_c.holds) rep.degree_d = rep.cond_c.witness.degree();
  return rep;
}

} // namespace gpl
