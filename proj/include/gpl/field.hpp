#pragma once

// Exact arithmetic over Q, prime fields F_p, and simple extensions K[x]/(m(x)).
// Every value is immutable and kept in canonical form, so equality is payload
// equality and values can be shared freely across threads.

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "gpl/error.hpp"

namespace gpl {

enum class FieldKind { Rationals, Prime, Extension };

class Field;
class FieldElem;
using FieldPtr = std::shared_ptr<const Field>;

class Field : public std::enable_shared_from_this<Field> {
public:
  static FieldPtr rationals();
  // p must be prime, 2 <= p < 2^31.
  static FieldPtr prime(std::int64_t p);
  // minpoly is given low-to-high over base and must be monic of degree >= 2.
  // Irreducibility is verified by root search for degree <= 3; above that the
  // polynomial is accepted as given and trusted_irreducible() reports it.
  static FieldPtr extension(FieldPtr base, std::vector<FieldElem> minpoly);

  FieldKind kind() const { return kind_; }
  std::int64_t prime_modulus() const;
  const FieldPtr& base() const;
  const std::vector<FieldElem>& minpoly() const;
  int extension_degree() const;
  bool trusted_irreducible() const { return trusted_; }

  std::int64_t characteristic() const;
  bool is_finite() const;
  mpz_class size() const; // finite fields only

  bool equals(const Field& other) const;

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(std::int64_t n) const;
  FieldElem from_rational(const mpq_class& q) const;
  // Parses "n", "-n", "n/d" (and for extensions only via element arrays, see
  // serialize.hpp). For prime fields the value is reduced mod p.
  FieldElem parse(const std::string& s) const;
  FieldElem generator() const; // extension fields: the residue class of x
  FieldElem make_extension_elem(std::vector<FieldElem> coeffs) const;

  // Deterministic enumeration of a finite field; throws InfiniteField.
  std::vector<FieldElem> enumerate() const;

  std::string describe() const;

private:
  Field() = default;
  friend class FieldElem;

  FieldKind kind_ = FieldKind::Rationals;
  std::int64_t p_ = 0;
  FieldPtr base_;
  std::vector<FieldElem> minpoly_; // owned copy, canonical over base_
  bool trusted_ = false;
};

class FieldElem {
public:
  // Default-constructed value is rational zero; containers need this.
  FieldElem();

  const FieldPtr& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inv() const;
  FieldElem pow(std::int64_t e) const; // e >= 0

  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
  // Deterministic total order used for container keys and stable output.
  int cmp(const FieldElem& o) const;
  bool operator<(const FieldElem& o) const { return cmp(o) < 0; }

  std::string str() const;

  // Payload accessors; each is valid only for the matching field kind.
  const mpq_class& rational_value() const;
  std::int64_t residue() const;
  const std::vector<FieldElem>& ext_coeffs() const;

private:
  friend class Field;
  FieldPtr field_;
  std::variant<mpq_class, std::int64_t, std::vector<FieldElem>> v_;

  static void require_same_field(const FieldElem& a, const FieldElem& b);
};

// Roots of x^2 + c1*x + c0 in desc (rationals or prime field only), distinct,
// sorted; empty when there is no root in the field.
std::vector<FieldElem> solve_quadratic(const FieldPtr& desc, const FieldElem& c1,
                                       const FieldElem& c0);

} // namespace gpl
