#pragma once

// Points of P^1, Moebius transformations, finite subgroup closure, orbits and
// divisors.  Matrices act on column vectors: (a:b) -> (m00*a + m01*b : m10*a +
// m11*b); the affine chart is t = a/b with (1:0) the point at infinity.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gpl/poly.hpp"

namespace gpl {

class ProjPoint {
public:
  ProjPoint() = default;
  ProjPoint(FieldElem a, FieldElem b); // canonicalizes; (0,0) is rejected
  static ProjPoint affine(const FieldElem& t);
  static ProjPoint infinity(const FieldPtr& f);

  const FieldElem& a() const { return a_; }
  const FieldElem& b() const { return b_; }
  const FieldPtr& field() const { return a_.field(); }
  bool is_infinity() const { return b_.is_zero(); }
  FieldElem affine_coord() const; // a/b; throws on the point at infinity

  bool operator==(const ProjPoint& o) const { return a_ == o.a_ && b_ == o.b_; }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  int cmp(const ProjPoint& o) const;
  bool operator<(const ProjPoint& o) const { return cmp(o) < 0; }

  std::string str() const;

private:
  FieldElem a_, b_;
};

class Moebius {
public:
  Moebius() = default;
  // Entries row-major; requires ad - bc != 0; stored in canonical form (first
  // nonzero entry scaled to 1), so projectively equal matrices compare equal.
  Moebius(FieldElem a, FieldElem b, FieldElem c, FieldElem d);
  static Moebius identity(const FieldPtr& f);
  static Moebius from_ints(const FieldPtr& f, std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d);

  const FieldElem& a() const { return a_; }
  const FieldElem& b() const { return b_; }
  const FieldElem& c() const { return c_; }
  const FieldElem& d() const { return d_; }
  const FieldPtr& field() const { return a_.field(); }

  Moebius operator*(const Moebius& o) const; // matrix product
  Moebius inverse() const;
  bool is_identity() const;

  ProjPoint apply(const ProjPoint& p) const;
  // The substitution t -> (a t + b) / (c t + d).
  RatFunc pullback() const;

  bool operator==(const Moebius& o) const;
  bool operator!=(const Moebius& o) const { return !(*this == o); }
  int cmp(const Moebius& o) const;
  bool operator<(const Moebius& o) const { return cmp(o) < 0; }

  std::string str() const;

private:
  FieldElem a_, b_, c_, d_;
  void canonicalize();
};

class FiniteMoebiusGroup {
public:
  static constexpr std::size_t kDefaultCap = 120;

  // Closure of the generators under composition; throws CapExceeded when the
  // closure grows past cap (an infinite or too-large group).
  static FiniteMoebiusGroup generate(std::vector<Moebius> gens,
                                     std::size_t cap = kDefaultCap);
  static FiniteMoebiusGroup intersect(const FiniteMoebiusGroup& g1,
                                      const FiniteMoebiusGroup& g2);

  std::size_t size() const { return elems_.size(); }
  const std::vector<Moebius>& elements() const { return elems_; } // sorted
  const std::vector<Moebius>& generators() const { return gens_; }
  const FieldPtr& field() const;
  bool contains(const Moebius& m) const;
  bool is_trivial() const { return elems_.size() == 1; }

private:
  std::vector<Moebius> elems_;
  std::vector<Moebius> gens_;
};

// Least n >= 1 with m^n scalar; throws CapExceeded past cap.
std::int64_t element_order(const Moebius& m, std::int64_t cap = FiniteMoebiusGroup::kDefaultCap);

// A finite formal integer combination of points with exact equality.
template <typename Pt>
class FormalSum {
public:
  void add(const Pt& p, std::int64_t mult) {
    if (mult == 0) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
      terms_.emplace(p, mult);
    } else {
      it->second += mult;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::int64_t coeff(const Pt& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? 0 : it->second;
  }

  std::int64_t degree() const {
    std::int64_t d = 0;
    for (const auto& [p, m] : terms_) d += m;
    return d;
  }

  std::size_t support_size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  FormalSum operator+(const FormalSum& o) const {
    FormalSum r = *this;
    for (const auto& [p, m] : o.terms_) r.add(p, m);
    return r;
  }

  FormalSum operator-(const FormalSum& o) const {
    FormalSum r = *this;
    for (const auto& [p, m] : o.terms_) r.add(p, -m);
    return r;
  }

  bool operator==(const FormalSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const FormalSum& o) const { return !(*this == o); }

  const std::map<Pt, std::int64_t>& terms() const { return terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [p, m] : terms_) {
      if (!s.empty()) s += " + ";
      if (m != 1) s += std::to_string(m) + "*";
      s += p.str();
    }
    return s;
  }

private:
  std::map<Pt, std::int64_t> terms_;
};

using Divisor = FormalSum<ProjPoint>;

// Sum over g in G of g(P), with multiplicities; degree equals |G|.
Divisor orbit_sum(const FiniteMoebiusGroup& g, const ProjPoint& p);

// Distinct points in the orbit of p.
std::vector<ProjPoint> orbit_points(const FiniteMoebiusGroup& g, const ProjPoint& p);

// Value of a rational function at a point of P^1, as a point of P^1.
ProjPoint ratfunc_value(const RatFunc& f, const ProjPoint& p);

// All points of P^1 over a finite field: (x:1) in enumeration order, then (1:0).
std::vector<ProjPoint> projective_line(const FieldPtr& f);

struct GroupStructure {
  std::size_t order = 0;
  bool abelian = false;
  bool cyclic = false;
  std::vector<std::int64_t> element_orders; // sorted ascending
  std::string label;                        // "trivial", "Z/4", "(Z/2)^2", "order n"
};

GroupStructure classify_group(const FiniteMoebiusGroup& g);

} // namespace gpl
