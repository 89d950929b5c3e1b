#pragma once

// Dense univariate polynomials and reduced rational functions over a Field.
// A RatFunc doubles as a self-map of the projective line; map_degree() is the
// degree of that map.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "gpl/field.hpp"

namespace gpl {

class Poly {
public:
  Poly() = default;
  explicit Poly(FieldPtr f) : field_(std::move(f)) {}
  Poly(FieldPtr f, std::vector<FieldElem> coeffs_low_to_high);

  static Poly from_ints(const FieldPtr& f, std::initializer_list<std::int64_t> cs);
  static Poly constant(const FieldElem& c);
  static Poly var(const FieldPtr& f); // t
  static Poly from_roots(const FieldPtr& f, const std::vector<FieldElem>& roots);

  const FieldPtr& field() const { return field_; }
  int degree() const { return int(coeffs_.size()) - 1; } // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const FieldElem& lc() const;
  FieldElem coeff(int i) const;
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }

  FieldElem eval(const FieldElem& x) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const FieldElem& k) const;
  Poly shifted(int k) const; // * t^k
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Division with remainder; divisor must be nonzero.
  static void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r);
  Poly monic() const;
  Poly derivative() const;
  static Poly gcd(const Poly& a, const Poly& b); // monic (or zero)
  Poly squarefree_part() const;                  // monic

  std::string str(const std::string& var = "t") const;

private:
  FieldPtr field_ = Field::rationals();
  std::vector<FieldElem> coeffs_; // low-to-high, trimmed
  void trim();
};

class RatFunc {
public:
  RatFunc() = default;
  // gcd-reduced with monic denominator; throws ZeroDenominator.
  static RatFunc reduce(Poly num, Poly den);
  static RatFunc from_poly(Poly p);
  static RatFunc constant(const FieldElem& c);
  static RatFunc var(const FieldPtr& f);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const FieldPtr& field() const { return num_.field(); }

  bool is_constant() const;
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  // Substitution (this o g); for nonconstant inputs the map degree is
  // multiplicative.
  RatFunc compose(const RatFunc& g) const;

  // max(deg num, deg den); throws ConstantFunction on constants.
  std::int64_t map_degree() const;

  // Value at an affine point; nullopt means the function has a pole there.
  std::optional<FieldElem> eval_affine(const FieldElem& t) const;
  // Value at t = infinity; nullopt means a pole at infinity.
  std::optional<FieldElem> value_at_infinity() const;

  std::string str(const std::string& var = "t") const;

private:
  Poly num_, den_;
};

} // namespace gpl
