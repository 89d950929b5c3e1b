#include <doctest.h>

#include <random>

#include "gpl/poly.hpp"

using namespace gpl;

namespace {

const FieldPtr& Q() {
  static const FieldPtr q = Field::rationals();
  return q;
}

RatFunc rf(std::initializer_list<std::int64_t> num, std::initializer_list<std::int64_t> den) {
  return RatFunc::reduce(Poly::from_ints(Q(), num), Poly::from_ints(Q(), den));
}

} // namespace

TEST_CASE("ratfunc_reduce cancels factors and makes the denominator monic") {
  // (t^2 - 1)/(t - 1) = t + 1
  CHECK(rf({-1, 0, 1}, {-1, 1}) == rf({1, 1}, {1}));
  // (2t)/2 = t
  CHECK(rf({0, 2}, {2}) == RatFunc::var(Q()));
  CHECK_THROWS_AS(RatFunc::reduce(Poly::var(Q()), Poly(Q())), Error);
}

TEST_CASE("ratfunc_reduce on the quintic model coordinate") {
  // ((t^4 - 6t^2 + 1)(2t - 1)) / (t(t+1)(t-1)(2t-1)) reduces to
  // (t^4 - 6t^2 + 1)/(t^3 - t)
  Poly num = Poly::from_ints(Q(), {1, 0, -6, 0, 1}) * Poly::from_ints(Q(), {-1, 2});
  Poly den = Poly::from_ints(Q(), {0, -1, 0, 1}) * Poly::from_ints(Q(), {-1, 2});
  RatFunc r = RatFunc::reduce(num, den);
  CHECK(r == rf({1, 0, -6, 0, 1}, {0, -1, 0, 1}));
}

TEST_CASE("compose substitutes and reduces") {
  RatFunc t2 = rf({0, 0, 1}, {1});
  RatFunc inv_t = rf({1}, {0, 1});
  CHECK(t2.compose(inv_t) == rf({1}, {0, 0, 1})); // t^2 o (1/t) = 1/t^2

  // ((t-1)/(t+1)) o ((t-1)/(t+1)) = -1/t; oracle: the matrix square
  // [[1,-1],[1,1]]^2 = [[0,-2],[2,0]] realizes the same substitution.
  RatFunc m = rf({-1, 1}, {1, 1});
  CHECK(m.compose(m) == rf({-1}, {0, 1}));

  RatFunc f = rf({3, 1, 4}, {1, 5});
  CHECK(f.compose(RatFunc::var(Q())) == f); // f o t = f
}

TEST_CASE("map_degree") {
  CHECK(rf({1, 0, -6, 0, 1}, {0, -1, 0, 1}).map_degree() == 4);
  CHECK(RatFunc::var(Q()).map_degree() == 1);
  CHECK(rf({1}, {1, 0, 1}).map_degree() == 2);
  CHECK_THROWS_AS(rf({7}, {1}).map_degree(), Error);
}

TEST_CASE("map degree is multiplicative under composition") {
  FieldPtr f13 = Field::prime(13);
  std::mt19937 rng(7);
  auto random_ratfunc = [&]() {
    for (;;) {
      std::vector<FieldElem> n, d;
      int dn = 1 + int(rng() % 4), dd = int(rng() % 5);
      for (int i = 0; i <= dn; ++i) n.push_back(f13->from_int(std::int64_t(rng() % 13)));
      for (int i = 0; i <= dd; ++i) d.push_back(f13->from_int(std::int64_t(rng() % 13)));
      Poly pn(f13, n), pd(f13, d);
      if (pn.is_zero() || pd.is_zero()) continue;
      RatFunc r = RatFunc::reduce(pn, pd);
      if (!r.is_constant()) return r;
    }
  };
  for (int i = 0; i < 50; ++i) {
    RatFunc a = random_ratfunc(), b = random_ratfunc();
    CHECK(a.compose(b).map_degree() == a.map_degree() * b.map_degree());
  }
}

TEST_CASE("polynomial division invariant") {
  FieldPtr f13 = Field::prime(13);
  std::mt19937 rng(11);
  for (int i = 0; i < 50; ++i) {
    std::vector<FieldElem> ac, bc;
    for (int k = 0; k <= int(rng() % 7); ++k) ac.push_back(f13->from_int(std::int64_t(rng() % 13)));
    for (int k = 0; k <= int(rng() % 4); ++k) bc.push_back(f13->from_int(std::int64_t(rng() % 13)));
    Poly a(f13, ac), b(f13, bc);
    if (b.is_zero()) continue;
    Poly q, r;
    Poly::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("gcd and squarefree part") {
  Poly f = Poly::from_ints(Q(), {-1, 1});       // t - 1
  Poly g = Poly::from_ints(Q(), {2, 1});        // t + 2
  Poly h = Poly::from_ints(Q(), {0, 3});        // 3t
  CHECK(Poly::gcd(f * h, g * h) == h.monic());
  CHECK((f * f * g).squarefree_part() == (f * g).monic());
}

TEST_CASE("evaluation at affine points and infinity") {
  RatFunc f = rf({1, 0, -6, 0, 1}, {0, -1, 0, 1}); // poles 0, 1, -1, infinity
  CHECK(!f.eval_affine(Q()->zero()).has_value());
  CHECK(!f.eval_affine(Q()->one()).has_value());
  CHECK(!f.value_at_infinity().has_value()); // deg num > deg den
  CHECK(f.eval_affine(Q()->from_int(2)).value() == Q()->parse("-7/6"));

  RatFunc bounded = rf({1, 2}, {3, 0, 1});
  CHECK(bounded.value_at_infinity().value().is_zero());
  RatFunc balanced = rf({1, 2}, {3, 4});
  CHECK(balanced.value_at_infinity().value() == Q()->parse("1/2"));
}

TEST_CASE("polynomial printing is readable") {
  CHECK(Poly::from_ints(Q(), {1, 0, -6, 0, 1}).str() == "t^4 - 6*t^2 + 1");
  CHECK(Poly::from_ints(Q(), {0, -1, 0, 1}).str() == "t^3 - t");
  CHECK(Poly(Q()).str() == "0");
}
