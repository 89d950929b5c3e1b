#include "gpl/poly.hpp"

#include <sstream>

namespace gpl {

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly::Poly(FieldPtr f, std::vector<FieldElem> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!c.field()->equals(*field_)) raise(Errc::DescriptorMismatch, "coefficient field mismatch");
  trim();
}

Poly Poly::from_ints(const FieldPtr& f, std::initializer_list<std::int64_t> cs) {
  std::vector<FieldElem> v;
  v.reserve(cs.size());
  for (auto n : cs) v.push_back(f->from_int(n));
  return Poly(f, std::move(v));
}

Poly Poly::constant(const FieldElem& c) { return Poly(c.field(), {c}); }

Poly Poly::var(const FieldPtr& f) { return Poly(f, {f->zero(), f->one()}); }

Poly Poly::from_roots(const FieldPtr& f, const std::vector<FieldElem>& roots) {
  Poly acc(f, {f->one()});
  for (const auto& r : roots) acc = acc * Poly(f, {-r, f->one()});
  return acc;
}

const FieldElem& Poly::lc() const {
  if (coeffs_.empty()) raise(Errc::Internal, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

FieldElem Poly::coeff(int i) const {
  if (i < 0 || std::size_t(i) >= coeffs_.size()) return field_->zero();
  return coeffs_[std::size_t(i)];
}

FieldElem Poly::eval(const FieldElem& x) const {
  FieldElem acc = field_->zero();
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<FieldElem> v(std::max(coeffs_.size(), o.coeffs_.size()), field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = v[i] + coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] = v[i] + o.coeffs_[i];
  return Poly(field_, std::move(v));
}

Poly Poly::operator-() const {
  std::vector<FieldElem> v = coeffs_;
  for (auto& c : v) c = -c;
  return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<FieldElem> v(coeffs_.size() + o.coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
  return Poly(field_, std::move(v));
}

Poly Poly::scaled(const FieldElem& k) const {
  std::vector<FieldElem> v = coeffs_;
  for (auto& c : v) c = c * k;
  return Poly(field_, std::move(v));
}

Poly Poly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<FieldElem> v(std::size_t(k), field_->zero());
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Poly(field_, std::move(v));
}

bool Poly::operator==(const Poly& o) const {
  if (coeffs_.size() != o.coeffs_.size()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!(coeffs_[i] == o.coeffs_[i])) return false;
  return true;
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.is_zero()) raise(Errc::DivisionByZero, "polynomial division by zero");
  q = Poly(a.field_);
  r = a;
  if (a.is_zero() || a.degree() < b.degree()) return;
  std::vector<FieldElem> qc(std::size_t(a.degree() - b.degree() + 1), a.field_->zero());
  FieldElem lbinv = b.lc().inv();
  std::vector<FieldElem> rc = r.coeffs_;
  while (int(rc.size()) - 1 >= b.degree() && !rc.empty()) {
    FieldElem c = rc.back() * lbinv;
    std::size_t shift = rc.size() - b.coeffs_.size();
    qc[shift] = c;
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
      rc[shift + i] = rc[shift + i] - c * b.coeffs_[i];
    while (!rc.empty() && rc.back().is_zero()) rc.pop_back();
  }
  q = Poly(a.field_, std::move(qc));
  r = Poly(a.field_, std::move(rc));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lc().inv());
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<FieldElem> v(coeffs_.size() - 1, field_->zero());
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * field_->from_int(std::int64_t(i));
  return Poly(field_, std::move(v));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly q, r;
    divmod(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

Poly Poly::squarefree_part() const {
  if (degree() <= 0) return monic();
  Poly g = gcd(*this, derivative());
  if (g.degree() <= 0) return monic();
  Poly q, r;
  divmod(*this, g, q, r);
  if (!r.is_zero()) raise(Errc::Internal, "squarefree division not exact");
  return q.monic();
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    FieldElem c = coeff(i);
    if (c.is_zero()) continue;
    std::string cs = c.str();
    if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
    bool neg = !cs.empty() && cs[0] == '-';
    if (!first) {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    if (i == 0) {
      os << cs;
    } else {
      if (cs == "1") {
      } else if (cs == "-1") {
        os << "-";
      } else {
        os << cs << "*";
      }
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

// --- RatFunc ---

RatFunc RatFunc::reduce(Poly num, Poly den) {
  if (den.is_zero()) raise(Errc::ZeroDenominator, "rational function with zero denominator");
  if (!num.field()->equals(*den.field()))
    raise(Errc::DescriptorMismatch, "numerator/denominator field mismatch");
  RatFunc f;
  if (num.is_zero()) {
    f.num_ = Poly(num.field());
    f.den_ = Poly(num.field(), {num.field()->one()});
    return f;
  }
  Poly g = Poly::gcd(num, den);
  if (g.degree() > 0) {
    Poly q, r;
    Poly::divmod(num, g, q, r);
    num = q;
    Poly::divmod(den, g, q, r);
    den = q;
  }
  FieldElem scale = den.lc().inv();
  f.num_ = num.scaled(scale);
  f.den_ = den.scaled(scale);
  return f;
}

RatFunc RatFunc::from_poly(Poly p) {
  FieldPtr f = p.field();
  return reduce(std::move(p), Poly(f, {f->one()}));
}

RatFunc RatFunc::constant(const FieldElem& c) { return from_poly(Poly::constant(c)); }

RatFunc RatFunc::var(const FieldPtr& f) { return from_poly(Poly::var(f)); }

bool RatFunc::is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return reduce(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-() const { return reduce(-num_, den_); }

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return reduce(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.num_.is_zero()) raise(Errc::DivisionByZero, "division by the zero function");
  return reduce(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::operator==(const RatFunc& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

RatFunc RatFunc::compose(const RatFunc& g) const {
  const FieldPtr& f = field();
  const Poly& n = g.num_;
  const Poly& d = g.den_;
  int m = std::max(num_.degree(), den_.degree());
  if (m < 0) m = 0;
  // Powers n^i d^(m-i) shared by both substituted polynomials.
  std::vector<Poly> npow(std::size_t(m) + 1, Poly(f, {f->one()}));
  std::vector<Poly> dpow(std::size_t(m) + 1, Poly(f, {f->one()}));
  for (int i = 1; i <= m; ++i) {
    npow[std::size_t(i)] = npow[std::size_t(i - 1)] * n;
    dpow[std::size_t(i)] = dpow[std::size_t(i - 1)] * d;
  }
  Poly a(f), b(f);
  for (int i = 0; i <= m; ++i) {
    FieldElem cn = num_.coeff(i);
    FieldElem cd = den_.coeff(i);
    Poly basis = npow[std::size_t(i)] * dpow[std::size_t(m - i)];
    if (!cn.is_zero()) a = a + basis.scaled(cn);
    if (!cd.is_zero()) b = b + basis.scaled(cd);
  }
  return reduce(std::move(a), std::move(b));
}

std::int64_t RatFunc::map_degree() const {
  if (is_constant()) raise(Errc::ConstantFunction, "map degree of a constant");
  return std::max(num_.degree(), den_.degree());
}

std::optional<FieldElem> RatFunc::eval_affine(const FieldElem& t) const {
  FieldElem dv = den_.eval(t);
  if (dv.is_zero()) return std::nullopt;
  return num_.eval(t) / dv;
}

std::optional<FieldElem> RatFunc::value_at_infinity() const {
  int dn = num_.degree(), dd = den_.degree();
  if (dn > dd) return std::nullopt;
  if (dn < dd) return field()->zero();
  return num_.lc() / den_.lc();
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.degree() == 0 && den_.coeff(0).is_one()) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

} // namespace gpl
