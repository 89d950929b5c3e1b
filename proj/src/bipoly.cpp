#include "gpl/bipoly.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace gpl {

BiPoly BiPoly::constant(const FieldElem& c) {
  BiPoly b(c.field());
  b.set_coeff(0, 0, c);
  return b;
}

BiPoly BiPoly::var_x(const FieldPtr& f) {
  BiPoly b(f);
  b.set_coeff(1, 0, f->one());
  return b;
}

BiPoly BiPoly::var_y(const FieldPtr& f) {
  BiPoly b(f);
  b.set_coeff(0, 1, f->one());
  return b;
}

BiPoly BiPoly::from_poly_x(const Poly& p) {
  BiPoly b(p.field());
  for (int i = 0; i <= p.degree(); ++i) b.set_coeff(i, 0, p.coeff(i));
  return b;
}

BiPoly BiPoly::from_poly_y(const Poly& p) {
  BiPoly b(p.field());
  for (int i = 0; i <= p.degree(); ++i) b.set_coeff(0, i, p.coeff(i));
  return b;
}

FieldElem BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? field_->zero() : it->second;
}

void BiPoly::set_coeff(int i, int j, const FieldElem& c) {
  if (c.is_zero())
    terms_.erase({i, j});
  else
    terms_[{i, j}] = c;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

int BiPoly::deg_x() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

int BiPoly::deg_y() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.set_coeff(m.first, m.second, r.coeff(m.first, m.second) + c);
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r(field_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) {
      int i = m1.first + m2.first, j = m1.second + m2.second;
      r.set_coeff(i, j, r.coeff(i, j) + c1 * c2);
    }
  return r;
}

BiPoly BiPoly::scaled(const FieldElem& k) const {
  BiPoly r(field_);
  if (k.is_zero()) return r;
  for (const auto& [m, c] : terms_) r.terms_[m] = c * k;
  return r;
}

bool BiPoly::operator==(const BiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (const auto& [m, c] : terms_) {
    auto it = o.terms_.find(m);
    if (it == o.terms_.end() || !(it->second == c)) return false;
  }
  return true;
}

FieldElem BiPoly::eval(const FieldElem& x, const FieldElem& y) const {
  FieldElem acc = field_->zero();
  for (const auto& [m, c] : terms_) acc = acc + c * x.pow(m.first) * y.pow(m.second);
  return acc;
}

RatFunc BiPoly::substitute(const RatFunc& fx, const RatFunc& fy) const {
  // Clear denominators first: sum_ij c_ij nf^i df^(dx-i) ng^j dg^(dy-j) over
  // df^dx dg^dy, with a single reduction at the end.  Per-term rational
  // arithmetic would trigger a large gcd for every addition.
  int dx = std::max(deg_x(), 0), dy = std::max(deg_y(), 0);
  auto powers = [this](const Poly& p, int top) {
    std::vector<Poly> v(std::size_t(top) + 1, Poly(field_, {field_->one()}));
    for (int i = 1; i <= top; ++i) v[std::size_t(i)] = v[std::size_t(i - 1)] * p;
    return v;
  };
  std::vector<Poly> nfp = powers(fx.num(), dx), dfp = powers(fx.den(), dx);
  std::vector<Poly> ngp = powers(fy.num(), dy), dgp = powers(fy.den(), dy);
  Poly num(field_);
  for (const auto& [m, c] : terms_) {
    Poly term = nfp[std::size_t(m.first)] * dfp[std::size_t(dx - m.first)] *
                ngp[std::size_t(m.second)] * dgp[std::size_t(dy - m.second)];
    num = num + term.scaled(c);
  }
  return RatFunc::reduce(std::move(num), dfp[std::size_t(dx)] * dgp[std::size_t(dy)]);
}

std::vector<std::pair<std::pair<int, int>, FieldElem>> BiPoly::sorted_terms() const {
  std::vector<std::pair<std::pair<int, int>, FieldElem>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
    if (ta != tb) return ta < tb;
    return a.first.first < b.first.first;
  });
  return ts;
}

BiPoly BiPoly::normalized() const {
  if (is_zero()) return *this;
  auto ts = sorted_terms();
  return scaled(ts.front().second.inv());
}

BiPoly BiPoly::exact_div(const BiPoly& divisor) const {
  if (divisor.is_zero()) raise(Errc::DivisionByZero, "exact_div by zero");
  BiPoly r = *this;
  BiPoly q(field_);
  // Leading term in plain lex order (X-major); map keys are already lex.
  auto lead = [](const BiPoly& p) { return std::prev(p.terms_.end()); };
  auto dl = lead(divisor);
  while (!r.is_zero()) {
    auto rl = lead(r);
    int di = rl->first.first - dl->first.first;
    int dj = rl->first.second - dl->first.second;
    if (di < 0 || dj < 0) raise(Errc::Internal, "bivariate division not exact");
    FieldElem c = rl->second / dl->second;
    q.set_coeff(di, dj, c);
    BiPoly mono(field_);
    mono.set_coeff(di, dj, c);
    r = r - mono * divisor;
  }
  return q;
}

// --- squarefree part (Y-primitive decomposition over k[X]) ---

namespace {

// BiPoly as a polynomial in Y with k[X] coefficients, low-to-high.
std::vector<Poly> to_x_polys(const BiPoly& b) {
  int dy = std::max(b.deg_y(), 0);
  int dx = b.deg_x();
  std::vector<std::vector<FieldElem>> cs(std::size_t(dy) + 1);
  for (auto& v : cs) v.assign(std::size_t(std::max(dx, 0)) + 1, b.field()->zero());
  for (const auto& [m, c] : b.sorted_terms()) cs[std::size_t(m.second)][std::size_t(m.first)] = c;
  std::vector<Poly> out;
  out.reserve(cs.size());
  for (auto& v : cs) out.emplace_back(b.field(), std::move(v));
  while (out.size() > 1 && out.back().is_zero()) out.pop_back();
  return out;
}

BiPoly from_x_polys(const FieldPtr& f, const std::vector<Poly>& v) {
  BiPoly b(f);
  for (std::size_t j = 0; j < v.size(); ++j)
    for (int i = 0; i <= v[j].degree(); ++i) b.set_coeff(i, int(j), v[j].coeff(i));
  return b;
}

bool ypolys_zero(const std::vector<Poly>& v) {
  for (const auto& p : v)
    if (!p.is_zero()) return false;
  return true;
}

int ydeg(const std::vector<Poly>& v) {
  for (int j = int(v.size()) - 1; j >= 0; --j)
    if (!v[std::size_t(j)].is_zero()) return j;
  return -1;
}

Poly content_x(const std::vector<Poly>& v) {
  Poly g(v.empty() ? Field::rationals() : v.front().field());
  for (const auto& p : v) g = Poly::gcd(g, p);
  return g;
}

std::vector<Poly> primitive_x(const std::vector<Poly>& v, const Poly& content) {
  std::vector<Poly> out;
  out.reserve(v.size());
  for (const auto& p : v) {
    if (p.is_zero()) {
      out.push_back(p);
      continue;
    }
    Poly q, r;
    Poly::divmod(p, content, q, r);
    if (!r.is_zero()) raise(Errc::Internal, "content division not exact");
    out.push_back(q);
  }
  return out;
}

// Pseudo-remainder with respect to Y; strictly decreases the Y-degree.
std::vector<Poly> prem_y(std::vector<Poly> ra, const std::vector<Poly>& rb) {
  int db = ydeg(rb);
  const Poly& lb = rb[std::size_t(db)];
  while (true) {
    int da = ydeg(ra);
    if (da < db || da < 0) return ra;
    Poly la = ra[std::size_t(da)];
    int shift = da - db;
    std::vector<Poly> next(std::size_t(da), Poly(la.field()));
    for (int j = 0; j < da; ++j) {
      Poly term = (std::size_t(j) < ra.size()) ? ra[std::size_t(j)] * lb : Poly(la.field());
      if (j - shift >= 0 && j - shift <= db) term = term - la * rb[std::size_t(j - shift)];
      next[std::size_t(j)] = term;
    }
    ra = std::move(next);
  }
}

// Primitive gcd with respect to Y of two X-primitive polynomials.
std::vector<Poly> gcd_y_primitive(std::vector<Poly> a, std::vector<Poly> b) {
  if (ydeg(a) < ydeg(b)) std::swap(a, b);
  while (true) {
    if (ypolys_zero(b)) return a;
    if (ydeg(b) == 0) {
      // Coprime up to content; both inputs are primitive.
      return {Poly::constant(b[0].field()->one())};
    }
    std::vector<Poly> r = prem_y(a, b);
    a = std::move(b);
    Poly c = content_x(r);
    b = ypolys_zero(r) ? r : primitive_x(r, c);
  }
}

} // namespace

BiPoly BiPoly::squarefree_part() const {
  if (is_zero()) return *this;
  std::vector<Poly> v = to_x_polys(*this);
  if (ydeg(v) == 0) {
    return from_x_polys(field_, {v[0].squarefree_part()});
  }
  Poly cont = content_x(v);
  std::vector<Poly> prim = primitive_x(v, cont);
  // d/dY of the primitive part.
  std::vector<Poly> dy(prim.size() - 1, Poly(field_));
  for (std::size_t j = 1; j < prim.size(); ++j)
    dy[j - 1] = prim[j].scaled(field_->from_int(std::int64_t(j)));
  Poly dcont = content_x(dy);
  std::vector<Poly> dprim = ypolys_zero(dy) ? dy : primitive_x(dy, dcont);
  BiPoly result(field_);
  if (ypolys_zero(dy)) {
    // Inseparable in Y (only possible in small characteristic); leave as is.
    result = from_x_polys(field_, prim);
  } else {
    std::vector<Poly> g = gcd_y_primitive(prim, dprim);
    if (ydeg(g) <= 0) {
      result = from_x_polys(field_, prim);
    } else {
      result = from_x_polys(field_, prim).exact_div(from_x_polys(field_, g));
    }
  }
  Poly cont_sf = cont.squarefree_part();
  if (cont_sf.degree() > 0) result = result * from_poly_x(cont_sf);
  return result;
}

std::string BiPoly::str(const std::string& vx, const std::string& vy) const {
  if (is_zero()) return "0";
  auto ts = sorted_terms();
  std::ostringstream os;
  bool first = true;
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    std::string cs = it->second.str();
    if (cs.find_first_of("+-", 1) != std::string::npos) cs = "(" + cs + ")";
    bool neg = !cs.empty() && cs[0] == '-';
    if (!first) {
      os << (neg ? " - " : " + ");
      if (neg) cs = cs.substr(1);
    }
    first = false;
    int i = it->first.first, j = it->first.second;
    bool unit = (cs == "1" || cs == "-1");
    if (i == 0 && j == 0) {
      os << cs;
      continue;
    }
    if (!unit)
      os << cs << "*";
    else if (cs == "-1")
      os << "-";
    if (i > 0) {
      os << vx;
      if (i > 1) os << "^" << i;
    }
    if (j > 0) {
      if (i > 0) os << "*";
      os << vy;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

// --- resultants ---

namespace {

// Standard resultant over a field via the Euclidean algorithm:
// res(A, B) = lc(A)^deg B * prod B(alpha_i) over the roots of A.
FieldElem univ_res_std(Poly a, Poly b) {
  const FieldPtr& f = a.field();
  if (a.is_zero() || b.is_zero()) return f->zero();
  FieldElem acc = f->one();
  while (true) {
    int m = a.degree(), n = b.degree();
    if (m == 0 && n == 0) return acc;
    if (n == 0) return acc * b.lc().pow(m);
    if (m == 0) return acc * a.lc().pow(n);
    if (m < n) {
      if ((m & 1) && (n & 1)) acc = -acc;
      std::swap(a, b);
      continue;
    }
    Poly q, r;
    Poly::divmod(a, b, q, r);
    if (r.is_zero()) return f->zero();
    if ((m & 1) && (n & 1)) acc = -acc;
    acc = acc * b.lc().pow(m - r.degree());
    a = b;
    b = r;
  }
}

void trim_tpoly(std::vector<BiPoly>& v) {
  while (!v.empty() && v.back().is_zero()) v.pop_back();
}

bool coeffs_x_only(const std::vector<BiPoly>& v) {
  for (const auto& c : v)
    if (c.deg_y() > 0) return false;
  return true;
}

bool coeffs_y_only(const std::vector<BiPoly>& v) {
  for (const auto& c : v)
    if (c.deg_x() > 0) return false;
  return true;
}

int max_deg_x(const std::vector<BiPoly>& v) {
  int d = 0;
  for (const auto& c : v) d = std::max(d, c.deg_x());
  return d;
}

int max_deg_y(const std::vector<BiPoly>& v) {
  int d = 0;
  for (const auto& c : v) d = std::max(d, c.deg_y());
  return d;
}

// Newton interpolation through (xs[i], vals[i]).
Poly newton_interp(const FieldPtr& f, const std::vector<FieldElem>& xs,
                   std::vector<FieldElem> vals) {
  std::size_t n = xs.size();
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      vals[i] = (vals[i] - vals[i - 1]) / (xs[i] - xs[i - j]);
  Poly p = Poly::constant(vals[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    p = p * Poly(f, {-xs[k], f->one()}) + Poly::constant(vals[k]);
  }
  return p;
}

// dx+1 distinct field points at which `avoid` (a univariate-in-one-axis
// leading coefficient product, evaluated over that axis) does not vanish.
std::optional<std::vector<FieldElem>> pick_nodes(const FieldPtr& f, int count,
                                                 const std::vector<BiPoly>& avoid, bool axis_x) {
  std::vector<FieldElem> pool;
  if (f->is_finite()) {
    pool = f->enumerate();
  } else {
    for (std::int64_t k = 0; k < std::int64_t(count) + 64; ++k) pool.push_back(f->from_int(k));
  }
  std::vector<FieldElem> out;
  for (const auto& x : pool) {
    if (int(out.size()) >= count) break;
    bool ok = true;
    for (const auto& b : avoid) {
      FieldElem v = axis_x ? b.eval(x, f->zero()) : b.eval(f->zero(), x);
      if (v.is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  if (int(out.size()) < count) return std::nullopt;
  return out;
}

std::optional<BiPoly> res_std_interp(const std::vector<BiPoly>& a, const std::vector<BiPoly>& b) {
  bool ok_shape = (coeffs_x_only(a) || coeffs_y_only(a)) && (coeffs_x_only(b) || coeffs_y_only(b));
  if (!ok_shape) return std::nullopt;
  const FieldPtr& f = a.front().field();
  int m = int(a.size()) - 1, n = int(b.size()) - 1;
  int dx = n * max_deg_x(a) + m * max_deg_x(b);
  int dy = n * max_deg_y(a) + m * max_deg_y(b);

  std::vector<BiPoly> avoid_x, avoid_y;
  for (const auto* lead : {&a.back(), &b.back()}) {
    if (lead->deg_x() > 0) avoid_x.push_back(*lead);
    if (lead->deg_y() > 0) avoid_y.push_back(*lead);
  }
  auto xs = pick_nodes(f, dx + 1, avoid_x, true);
  auto ys = pick_nodes(f, dy + 1, avoid_y, false);
  if (!xs || !ys) return std::nullopt;

  // Values on the grid, then interpolate in Y per x-node, then in X.
  std::vector<std::vector<FieldElem>> val(xs->size());
  for (std::size_t i = 0; i < xs->size(); ++i) {
    val[i].reserve(ys->size());
    for (std::size_t j = 0; j < ys->size(); ++j) {
      std::vector<FieldElem> ac, bc;
      for (const auto& c : a) ac.push_back(c.eval((*xs)[i], (*ys)[j]));
      for (const auto& c : b) bc.push_back(c.eval((*xs)[i], (*ys)[j]));
      val[i].push_back(univ_res_std(Poly(f, std::move(ac)), Poly(f, std::move(bc))));
    }
  }
  std::vector<Poly> ypolys;
  ypolys.reserve(xs->size());
  for (std::size_t i = 0; i < xs->size(); ++i) ypolys.push_back(newton_interp(f, *ys, val[i]));
  BiPoly out(f);
  for (int j = 0; j <= dy; ++j) {
    std::vector<FieldElem> col;
    col.reserve(xs->size());
    for (std::size_t i = 0; i < xs->size(); ++i) col.push_back(ypolys[i].coeff(j));
    Poly cx = newton_interp(f, *xs, std::move(col));
    for (int i = 0; i <= cx.degree(); ++i) {
      FieldElem c = cx.coeff(i);
      if (!c.is_zero()) out.set_coeff(i, j, c);
    }
  }
  return out;
}

// Fraction-free determinant of the Sylvester matrix; handles every shape.
BiPoly res_std_sylvester(const std::vector<BiPoly>& a, const std::vector<BiPoly>& b) {
  const FieldPtr& f = a.front().field();
  int m = int(a.size()) - 1, n = int(b.size()) - 1;
  std::size_t sz = std::size_t(m + n);
  if (sz == 0) return BiPoly::constant(f->one());
  std::vector<std::vector<BiPoly>> s(sz, std::vector<BiPoly>(sz, BiPoly(f)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[std::size_t(r)][std::size_t(r + k)] = a[std::size_t(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) s[std::size_t(n + r)][std::size_t(r + k)] = b[std::size_t(n - k)];

  bool negate = false;
  BiPoly prev = BiPoly::constant(f->one());
  for (std::size_t k = 0; k + 1 < sz; ++k) {
    std::size_t piv = sz;
    for (std::size_t r = k; r < sz; ++r)
      if (!s[r][k].is_zero()) {
        piv = r;
        break;
      }
    if (piv == sz) return BiPoly(f); // singular: resultant is zero
    if (piv != k) {
      std::swap(s[piv], s[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < sz; ++i) {
      for (std::size_t j = k + 1; j < sz; ++j)
        s[i][j] = (s[k][k] * s[i][j] - s[i][k] * s[k][j]).exact_div(prev);
      s[i][k] = BiPoly(f);
    }
    prev = s[k][k];
  }
  BiPoly det = s[sz - 1][sz - 1];
  return negate ? -det : det;
}

BiPoly res_std_bipoly(std::vector<BiPoly> a, std::vector<BiPoly> b) {
  trim_tpoly(a);
  trim_tpoly(b);
  if (a.empty() || b.empty()) {
    FieldPtr f = a.empty() ? (b.empty() ? Field::rationals() : b.front().field())
                           : a.front().field();
    return BiPoly(f);
  }
  if (auto fast = res_std_interp(a, b)) return *fast;
  return res_std_sylvester(a, b);
}

} // namespace

BiPoly resultant_in_t(const std::vector<BiPoly>& a, const std::vector<BiPoly>& b) {
  // Convention pinned by res_t(t - a, t - b) = b - a, i.e. the standard
  // resultant with the arguments swapped.
  return res_std_bipoly(b, a);
}

FieldElem resultant(const Poly& a, const Poly& b) {
  return univ_res_std(b, a);
}

} // namespace gpl
