#pragma once

// Sparse bivariate polynomials, the resultant used for implicitization, and
// supporting exact machinery (squarefree part, exact division).

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gpl/poly.hpp"

namespace gpl {

class BiPoly {
public:
  BiPoly() : field_(Field::rationals()) {}
  explicit BiPoly(FieldPtr f) : field_(std::move(f)) {}

  static BiPoly constant(const FieldElem& c);
  static BiPoly var_x(const FieldPtr& f);
  static BiPoly var_y(const FieldPtr& f);
  // p(t) read as a polynomial in X (or Y).
  static BiPoly from_poly_x(const Poly& p);
  static BiPoly from_poly_y(const Poly& p);

  const FieldPtr& field() const { return field_; }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coeff(int i, int j) const;
  void set_coeff(int i, int j, const FieldElem& c);
  int total_degree() const; // -1 for zero
  int deg_x() const;
  int deg_y() const;

  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator-() const;
  BiPoly scaled(const FieldElem& k) const;
  bool operator==(const BiPoly& o) const;
  bool operator!=(const BiPoly& o) const { return !(*this == o); }

  FieldElem eval(const FieldElem& x, const FieldElem& y) const;
  // Substitute rational functions for X and Y.
  RatFunc substitute(const RatFunc& fx, const RatFunc& fy) const;

  // Exact division in k[X,Y]; throws Internal if the division is not exact.
  BiPoly exact_div(const BiPoly& divisor) const;
  // Product of the distinct irreducible factors (char 0 or large enough).
  BiPoly squarefree_part() const;
  // Scale so the first nonzero coefficient in (i+j, i)-ascending order is 1.
  BiPoly normalized() const;

  // Terms sorted by (i+j, i) ascending; the serialization order.
  std::vector<std::pair<std::pair<int, int>, FieldElem>> sorted_terms() const;

  std::string str(const std::string& vx = "X", const std::string& vy = "Y") const;

private:
  FieldPtr field_;
  std::map<std::pair<int, int>, FieldElem> terms_; // (i,j) -> nonzero coeff
};

// Resultant with respect to t of two nonzero polynomials in t with BiPoly
// coefficients (low-to-high).  Sign convention: res_t({t - a}, {t - b}) = b - a.
BiPoly resultant_in_t(const std::vector<BiPoly>& a, const std::vector<BiPoly>& b);

// Same convention, univariate scalar case.
FieldElem resultant(const Poly& a, const Poly& b);

} // namespace gpl
