#include "gpl/projective.hpp"

#include <algorithm>
#include <set>

namespace gpl {

// --- ProjPoint ---

ProjPoint::ProjPoint(FieldElem a, FieldElem b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.field()->equals(*b_.field()))
    raise(Errc::DescriptorMismatch, "point coordinates over different fields");
  if (a_.is_zero() && b_.is_zero()) raise(Errc::ConfigError, "(0:0) is not a projective point");
  if (!a_.is_zero()) {
    FieldElem inv = a_.inv();
    b_ = b_ * inv;
    a_ = a_.field()->one();
  } else {
    b_ = b_.field()->one();
  }
}

ProjPoint ProjPoint::affine(const FieldElem& t) { return ProjPoint(t, t.field()->one()); }

ProjPoint ProjPoint::infinity(const FieldPtr& f) { return ProjPoint(f->one(), f->zero()); }

FieldElem ProjPoint::affine_coord() const {
  if (is_infinity()) raise(Errc::Internal, "affine coordinate of the point at infinity");
  return a_ / b_;
}

int ProjPoint::cmp(const ProjPoint& o) const {
  int c = a_.cmp(o.a_);
  if (c != 0) return c;
  return b_.cmp(o.b_);
}

std::string ProjPoint::str() const { return "(" + a_.str() + " : " + b_.str() + ")"; }

// --- Moebius ---

void Moebius::canonicalize() {
  for (FieldElem* e : {&a_, &b_, &c_, &d_}) {
    if (!e->is_zero()) {
      FieldElem inv = e->inv();
      a_ = a_ * inv;
      b_ = b_ * inv;
      c_ = c_ * inv;
      d_ = d_ * inv;
      return;
    }
  }
}

Moebius::Moebius(FieldElem a, FieldElem b, FieldElem c, FieldElem d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  const FieldPtr& f = a_.field();
  if (!b_.field()->equals(*f) || !c_.field()->equals(*f) || !d_.field()->equals(*f))
    raise(Errc::DescriptorMismatch, "matrix entries over different fields");
  if ((a_ * d_ - b_ * c_).is_zero())
    raise(Errc::ConfigError, "matrix is singular");
  canonicalize();
}

Moebius Moebius::identity(const FieldPtr& f) {
  return Moebius(f->one(), f->zero(), f->zero(), f->one());
}

Moebius Moebius::from_ints(const FieldPtr& f, std::int64_t a, std::int64_t b, std::int64_t c,
                           std::int64_t d) {
  return Moebius(f->from_int(a), f->from_int(b), f->from_int(c), f->from_int(d));
}

Moebius Moebius::operator*(const Moebius& o) const {
  return Moebius(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_,
                 c_ * o.a_ + d_ * o.c_, c_ * o.b_ + d_ * o.d_);
}

Moebius Moebius::inverse() const { return Moebius(d_, -b_, -c_, a_); }

bool Moebius::is_identity() const { return *this == Moebius::identity(field()); }

ProjPoint Moebius::apply(const ProjPoint& p) const {
  return ProjPoint(a_ * p.a() + b_ * p.b(), c_ * p.a() + d_ * p.b());
}

RatFunc Moebius::pullback() const {
  const FieldPtr& f = field();
  return RatFunc::reduce(Poly(f, {b_, a_}), Poly(f, {d_, c_}));
}

bool Moebius::operator==(const Moebius& o) const { return cmp(o) == 0; }

int Moebius::cmp(const Moebius& o) const {
  int c = a_.cmp(o.a_);
  if (c != 0) return c;
  c = b_.cmp(o.b_);
  if (c != 0) return c;
  c = c_.cmp(o.c_);
  if (c != 0) return c;
  return d_.cmp(o.d_);
}

std::string Moebius::str() const {
  return "[" + a_.str() + ", " + b_.str() + "; " + c_.str() + ", " + d_.str() + "]";
}

// --- FiniteMoebiusGroup ---

FiniteMoebiusGroup FiniteMoebiusGroup::generate(std::vector<Moebius> gens, std::size_t cap) {
  if (cap < 1) raise(Errc::ConfigError, "cap must be at least 1");
  if (gens.empty()) raise(Errc::ConfigError, "no generators given");
  const FieldPtr& f = gens.front().field();
  for (const auto& g : gens)
    if (!g.field()->equals(*f)) raise(Errc::DescriptorMismatch, "generators over different fields");

  std::set<Moebius> closure;
  closure.insert(Moebius::identity(f));
  std::vector<Moebius> frontier(closure.begin(), closure.end());
  for (const auto& g : gens)
    if (closure.insert(g).second) frontier.push_back(g);

  // Right-multiply by generators until closed; a closed generating set under
  // right products containing 1 is a subgroup when finite.
  while (!frontier.empty()) {
    std::vector<Moebius> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Moebius y = x * g;
        if (closure.insert(y).second) {
          if (closure.size() > cap)
            raise(Errc::CapExceeded,
                  "group closure exceeded cap " + std::to_string(cap));
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }

  FiniteMoebiusGroup g;
  g.elems_.assign(closure.begin(), closure.end());
  g.gens_ = std::move(gens);
  return g;
}

FiniteMoebiusGroup FiniteMoebiusGroup::intersect(const FiniteMoebiusGroup& g1,
                                                 const FiniteMoebiusGroup& g2) {
  if (!g1.field()->equals(*g2.field()))
    raise(Errc::DescriptorMismatch, "intersecting groups over different fields");
  FiniteMoebiusGroup r;
  std::set_intersection(g1.elems_.begin(), g1.elems_.end(), g2.elems_.begin(), g2.elems_.end(),
                        std::back_inserter(r.elems_));
  r.gens_ = r.elems_;
  return r;
}

const FieldPtr& FiniteMoebiusGroup::field() const {
  if (elems_.empty()) raise(Errc::Internal, "empty group");
  return elems_.front().field();
}

bool FiniteMoebiusGroup::contains(const Moebius& m) const {
  return std::binary_search(elems_.begin(), elems_.end(), m);
}

std::int64_t element_order(const Moebius& m, std::int64_t cap) {
  if (cap < 1) raise(Errc::ConfigError, "cap must be at least 1");
  Moebius id = Moebius::identity(m.field());
  Moebius acc = m;
  for (std::int64_t n = 1; n <= cap; ++n) {
    if (acc == id) return n;
    acc = acc * m;
  }
  raise(Errc::CapExceeded, "element order exceeds cap " + std::to_string(cap));
}

Divisor orbit_sum(const FiniteMoebiusGroup& g, const ProjPoint& p) {
  Divisor d;
  for (const auto& m : g.elements()) d.add(m.apply(p), 1);
  return d;
}

std::vector<ProjPoint> orbit_points(const FiniteMoebiusGroup& g, const ProjPoint& p) {
  Divisor sum = orbit_sum(g, p);
  std::vector<ProjPoint> pts;
  for (const auto& [q, m] : sum.terms()) pts.push_back(q);
  return pts;
}

ProjPoint ratfunc_value(const RatFunc& f, const ProjPoint& p) {
  const FieldPtr& k = f.field();
  if (p.is_infinity()) {
    int dn = f.num().degree(), dd = f.den().degree();
    if (dn > dd) return ProjPoint::infinity(k);
    if (dn < dd) return ProjPoint(k->zero(), k->one());
    return ProjPoint(f.num().lc(), f.den().lc());
  }
  FieldElem t = p.affine_coord();
  return ProjPoint(f.num().eval(t), f.den().eval(t));
}

std::vector<ProjPoint> projective_line(const FieldPtr& f) {
  std::vector<ProjPoint> pts;
  for (const auto& x : f->enumerate()) pts.push_back(ProjPoint::affine(x));
  pts.push_back(ProjPoint::infinity(f));
  return pts;
}

GroupStructure classify_group(const FiniteMoebiusGroup& g) {
  GroupStructure s;
  s.order = g.size();
  s.abelian = true;
  for (const auto& x : g.elements()) {
    for (const auto& y : g.elements())
      if (!(x * y == y * x)) {
        s.abelian = false;
        break;
      }
    if (!s.abelian) break;
  }
  for (const auto& x : g.elements())
    s.element_orders.push_back(element_order(x, std::int64_t(g.size())));
  std::sort(s.element_orders.begin(), s.element_orders.end());
  s.cyclic = std::find(s.element_orders.begin(), s.element_orders.end(),
                       std::int64_t(s.order)) != s.element_orders.end();
  if (s.order == 1) {
    s.label = "trivial";
  } else if (s.cyclic) {
    s.label = "Z/" + std::to_string(s.order);
  } else if (s.order == 4) {
    s.label = "(Z/2)^2";
  } else {
    s.label = "order " + std::to_string(s.order);
  }
  return s;
}

} // namespace gpl
