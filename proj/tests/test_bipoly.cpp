#include <doctest.h>

#include <random>

#include "gpl/bipoly.hpp"
#include "gpl/matrix.hpp"

using namespace gpl;

namespace {

const FieldPtr& Q() {
  static const FieldPtr q = Field::rationals();
  return q;
}

// t - c as a coefficient vector with BiPoly entries.
std::vector<BiPoly> t_minus(const BiPoly& c) {
  return {-c, BiPoly::constant(c.field()->one())};
}

// Test oracle: determinant of the Sylvester matrix by cofactor expansion,
// no division involved.  Convention matches resultant_in_t (arguments swapped).
BiPoly det_cofactor(std::vector<std::vector<BiPoly>> m, const FieldPtr& f) {
  std::size_t n = m.size();
  if (n == 0) return BiPoly::constant(f->one());
  if (n == 1) return m[0][0];
  BiPoly acc(f);
  for (std::size_t k = 0; k < n; ++k) {
    if (m[0][k].is_zero()) continue;
    std::vector<std::vector<BiPoly>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BiPoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != k) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    BiPoly term = m[0][k] * det_cofactor(std::move(sub), f);
    acc = (k % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

BiPoly resultant_oracle(const std::vector<BiPoly>& a, const std::vector<BiPoly>& b,
                        const FieldPtr& f) {
  // Sylvester matrix of (b, a): deg(a) rows of b then deg(b) rows of a.
  int m = int(b.size()) - 1, n = int(a.size()) - 1;
  std::size_t sz = std::size_t(m + n);
  std::vector<std::vector<BiPoly>> s(sz, std::vector<BiPoly>(sz, BiPoly(f)));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[std::size_t(r)][std::size_t(r + k)] = b[std::size_t(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[std::size_t(n + r)][std::size_t(r + k)] = a[std::size_t(n - k)];
  return det_cofactor(std::move(s), f);
}

} // namespace

TEST_CASE("resultant sign convention: res_t(t - X, t - Y) = Y - X") {
  BiPoly x = BiPoly::var_x(Q()), y = BiPoly::var_y(Q());
  BiPoly r = resultant_in_t(t_minus(x), t_minus(y));
  CHECK(r == y - x);
}

TEST_CASE("resultant evaluation property: res_t(t^2 - X, t - 1) = 1 - X") {
  BiPoly x = BiPoly::var_x(Q());
  std::vector<BiPoly> a = {-x, BiPoly(Q()), BiPoly::constant(Q()->one())};
  std::vector<BiPoly> b = t_minus(BiPoly::constant(Q()->one()));
  BiPoly r = resultant_in_t(a, b);
  CHECK(r == BiPoly::constant(Q()->one()) - x);
}

TEST_CASE("resultant of t^2 - 1 and t^2 - 4 is 9") {
  auto c = [&](std::int64_t n) { return BiPoly::constant(Q()->from_int(n)); };
  std::vector<BiPoly> a = {c(-1), BiPoly(Q()), c(1)};
  std::vector<BiPoly> b = {c(-4), BiPoly(Q()), c(1)};
  BiPoly r = resultant_in_t(a, b);
  CHECK(r == c(9));
}

TEST_CASE("resultant agrees with the cofactor-expansion oracle") {
  FieldPtr f13 = Field::prime(13);
  std::mt19937 rng(5);
  BiPoly x = BiPoly::var_x(f13), y = BiPoly::var_y(f13);
  auto random_coeff = [&](const BiPoly& var) {
    BiPoly c = BiPoly::constant(f13->from_int(std::int64_t(rng() % 13)));
    if (rng() % 2) c = c + var.scaled(f13->from_int(std::int64_t(rng() % 13)));
    return c;
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<BiPoly> a, b;
    int da = 1 + int(rng() % 3), db = 1 + int(rng() % 3);
    for (int i = 0; i < da; ++i) a.push_back(random_coeff(x));
    a.push_back(BiPoly::constant(f13->from_int(1 + std::int64_t(rng() % 12))));
    for (int i = 0; i < db; ++i) b.push_back(random_coeff(y));
    b.push_back(BiPoly::constant(f13->from_int(1 + std::int64_t(rng() % 12))));
    CHECK(resultant_in_t(a, b) == resultant_oracle(a, b, f13));
  }
}

TEST_CASE("resultant falls back to elimination on shapes interpolation cannot split") {
  // coefficients mixing X and Y in one argument
  BiPoly x = BiPoly::var_x(Q()), y = BiPoly::var_y(Q());
  BiPoly one = BiPoly::constant(Q()->one());
  std::vector<BiPoly> a = {x + y, one};            // t + X + Y
  std::vector<BiPoly> b = {x * y - one, one};      // t + XY - 1
  CHECK(resultant_in_t(a, b) == resultant_oracle(a, b, Q()));

  // a field too small to host the interpolation grid
  FieldPtr f3 = Field::prime(3);
  BiPoly x3 = BiPoly::var_x(f3), y3 = BiPoly::var_y(f3);
  BiPoly one3 = BiPoly::constant(f3->one());
  std::vector<BiPoly> a3 = {x3, x3 + one3, one3, one3}; // t^3 + t^2 + (X+1) t + X
  std::vector<BiPoly> b3 = {y3, one3, one3, one3};      // t^3 + t^2 + t + Y
  CHECK(resultant_in_t(a3, b3) == resultant_oracle(a3, b3, f3));
}

TEST_CASE("resultant over a finite extension field uses distinct nodes") {
  // F_9 = F_3[x]/(x^2 + 1); the grid needs more nodes than the prime subfield
  FieldPtr f3 = Field::prime(3);
  FieldPtr f9 = Field::extension(f3, {f3->one(), f3->zero(), f3->one()});
  FieldElem u = f9->generator();
  BiPoly x = BiPoly::var_x(f9), y = BiPoly::var_y(f9);
  BiPoly one = BiPoly::constant(f9->one());
  std::vector<BiPoly> a = {x.scaled(u), x + one, one, one, one}; // deg_t 4, X-linear
  std::vector<BiPoly> b = {y, one, one, one, one};               // deg_t 4, Y-linear
  CHECK(resultant_in_t(a, b) == resultant_oracle(a, b, f9));
}

TEST_CASE("scalar resultant is zero iff the gcd is nonconstant") {
  FieldPtr f13 = Field::prime(13);
  std::mt19937 rng(9);
  auto random_poly = [&](int maxdeg) {
    for (;;) {
      std::vector<FieldElem> c;
      for (int i = 0; i <= int(rng() % std::size_t(maxdeg + 1)); ++i)
        c.push_back(f13->from_int(std::int64_t(rng() % 13)));
      Poly p(f13, c);
      if (!p.is_zero()) return p;
    }
  };
  for (int trial = 0; trial < 60; ++trial) {
    Poly a = random_poly(3), b = random_poly(3);
    if (a.degree() == 0 && b.degree() == 0) continue;
    bool r_zero = resultant(a, b).is_zero();
    bool common = Poly::gcd(a, b).degree() > 0;
    CHECK(r_zero == common);
  }
}

TEST_CASE("resultant handles a leading coefficient that vanishes at small nodes") {
  // lc_t of a is X - 1, which kills the node X = 1; node selection must skip it.
  BiPoly x = BiPoly::var_x(Q()), y = BiPoly::var_y(Q());
  BiPoly one = BiPoly::constant(Q()->one());
  std::vector<BiPoly> a = {-x, x - one};             // (X-1) t - X
  std::vector<BiPoly> b = {-y, one};                 // t - Y
  // res = (X-1) Y - X up to the fixed sign convention; check by oracle.
  CHECK(resultant_in_t(a, b) == resultant_oracle(a, b, Q()));
}

TEST_CASE("squarefree part drops repeated factors") {
  BiPoly x = BiPoly::var_x(Q()), y = BiPoly::var_y(Q());
  BiPoly f = x + y, g = x - y;
  BiPoly sq = f * f * g;
  CHECK(sq.squarefree_part().normalized() == (f * g).normalized());
  // with an X-only content squared
  BiPoly h = x * x * (y * y - x);
  CHECK(h.squarefree_part().normalized() == (x * (y * y - x)).normalized());
  // already squarefree stays put
  CHECK((f * g).squarefree_part().normalized() == (f * g).normalized());
}

TEST_CASE("exact division round-trips") {
  FieldPtr f13 = Field::prime(13);
  std::mt19937 rng(21);
  auto random_bipoly = [&]() {
    BiPoly b(f13);
    for (int k = 0; k < 4; ++k)
      b.set_coeff(int(rng() % 3), int(rng() % 3), f13->from_int(std::int64_t(rng() % 13)));
    return b;
  };
  for (int trial = 0; trial < 40; ++trial) {
    BiPoly a = random_bipoly(), b = random_bipoly();
    if (a.is_zero() || b.is_zero()) continue;
    CHECK((a * b).exact_div(b) == a);
  }
}

TEST_CASE("substitute plugs rational functions into the two variables") {
  // circle: X^2 + Y^2 - 1 vanishes on ((1-t^2)/(1+t^2), 2t/(1+t^2))
  BiPoly x = BiPoly::var_x(Q()), y = BiPoly::var_y(Q());
  BiPoly circle = x * x + y * y - BiPoly::constant(Q()->one());
  RatFunc f = RatFunc::reduce(Poly::from_ints(Q(), {1, 0, -1}), Poly::from_ints(Q(), {1, 0, 1}));
  RatFunc g = RatFunc::reduce(Poly::from_ints(Q(), {0, 2}), Poly::from_ints(Q(), {1, 0, 1}));
  CHECK(circle.substitute(f, g).is_zero());
}

TEST_CASE("terms are sorted by (total degree, x degree)") {
  BiPoly b(Q());
  b.set_coeff(2, 0, Q()->one());
  b.set_coeff(0, 1, Q()->one());
  b.set_coeff(1, 1, Q()->one());
  b.set_coeff(0, 0, Q()->from_int(5));
  auto ts = b.sorted_terms();
  REQUIRE(ts.size() == 4);
  CHECK(ts[0].first == std::pair<int, int>{0, 0});
  CHECK(ts[1].first == std::pair<int, int>{0, 1});
  CHECK(ts[2].first == std::pair<int, int>{1, 1});
  CHECK(ts[3].first == std::pair<int, int>{2, 0});
}

TEST_CASE("kernel basics") {
  FieldPtr q = Q();
  ExactMatrix id3(q, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) id3.at(i, i) = q->one();
  CHECK(kernel(id3).empty());

  ExactMatrix row(q, 1, 2);
  row.at(0, 0) = q->one();
  row.at(0, 1) = q->from_int(-1);
  auto basis = kernel(row);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0][0] == q->one());
  CHECK(basis[0][1] == q->one());
}

TEST_CASE("kernel vectors satisfy M v = 0 exactly") {
  FieldPtr f13 = Field::prime(13);
  std::mt19937 rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t rows = 2 + rng() % 4, cols = 2 + rng() % 5;
    ExactMatrix m(f13, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = f13->from_int(std::int64_t(rng() % 13));
    auto basis = kernel(m);
    CHECK(basis.size() == cols - m.rank());
    for (const auto& v : basis)
      for (std::size_t r = 0; r < rows; ++r) {
        FieldElem acc = f13->zero();
        for (std::size_t c = 0; c < cols; ++c) acc = acc + m.at(r, c) * v[c];
        CHECK(acc.is_zero());
      }
  }
}
