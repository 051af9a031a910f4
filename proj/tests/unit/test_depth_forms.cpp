#include "ndga/depth_forms.hpp"
#include "ndga/error.hpp"
#include "depth_oracle.hpp"
#include "random_expr.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ndga;
using testing::random_depth_form;

namespace {

const ScalarExpr x1 = ScalarExpr::variable(1);
const ScalarExpr x2 = ScalarExpr::variable(2);

DepthIndex idx(std::vector<int> d) { return DepthIndex{std::move(d)}; }

const std::vector<DepthProfile> small_profiles{{2}, {3}, {4}, {5}, {2, 2}, {3, 2}, {2, 3}, {3, 3}, {4, 2},
                                               {2, 2, 2}, {3, 2, 2}, {2, 3, 2}, {4, 3}, {2, 2, 2, 2}};

int degree_of(const DepthForm& a) {
  int d = -1;
  for (const auto& [i, c] : a.components()) {
    if (d >= 0 && d != i.degree()) return -1;
    d = i.degree();
  }
  return d;
}

} // namespace

TEST_CASE("depth index rendering and parsing") {
  const DepthProfile p{3, 2};
  CHECK(idx({2, 1}).str() == "d2x1*dx2");
  CHECK(idx({0, 0}).str() == "1");
  CHECK(parse_depth_index(p, "d2x1*dx2") == idx({2, 1}));
  CHECK(parse_depth_index(p, "dx2") == idx({0, 1}));
  CHECK(parse_depth_index(p, "1") == idx({0, 0}));
  CHECK_THROWS_AS(parse_depth_index(p, "d2x2"), ParseError);
  CHECK_THROWS_AS(parse_depth_index(p, "dx1*dx1"), ParseError);
  CHECK_THROWS_AS(parse_depth_index(p, "dx3"), ParseError);
  CHECK(idx({2, 1}).degree() == 3);
  CHECK(idx({1, 0}) < idx({0, 1}));
  CHECK(idx({1, 0}) < idx({2, 0}));
}

TEST_CASE("multiply examples") {
  const DepthProfile p{3, 2};
  const auto dx1 = DepthForm::generator(p, 1, 1), dx2 = DepthForm::generator(p, 2, 1);
  const auto d2x1 = DepthForm::generator(p, 1, 2);
  CHECK(multiply(dx1, dx2) == DepthForm::monomial(p, idx({1, 1})));
  CHECK(multiply(dx2, dx1) == DepthForm::monomial(p, idx({1, 1}), -1));
  CHECK(multiply(d2x1, dx2) == DepthForm::monomial(p, idx({2, 1})));
  CHECK(multiply(dx2, d2x1) == DepthForm::monomial(p, idx({2, 1})));
  CHECK(multiply(dx1, dx1).is_structurally_zero());
  CHECK(multiply(dx1, d2x1).is_structurally_zero());
  CHECK(depth_product_sign(idx({0, 1}), idx({1, 0})) == -1);
  CHECK(depth_product_sign(idx({1, 0}), idx({1, 0})) == 0);
  CHECK_THROWS_AS(multiply(dx1, DepthForm::generator({3}, 1, 1)), DimensionError);
}

TEST_CASE("differential examples") {
  const DepthProfile p{3, 2};
  const ScalarExpr f = x1 * x1 * x2;
  DepthForm expected(p);
  expected.add(idx({1, 0}), f.diff(1));
  expected.add(idx({0, 1}), f.diff(2));
  CHECK(differential(DepthForm::function(p, f)) == expected);

  const ScalarExpr f1 = x1 * x1 * x1;
  CHECK(differential(DepthForm::monomial({4}, idx({1}), f1)) == DepthForm::monomial({4}, idx({2}), f1));

  // profile (2,2) is de Rham: d(x2 dx1) = dx2 dx1 = -dx1 dx2
  CHECK(differential(DepthForm::monomial({2, 2}, idx({1, 0}), x2)) == DepthForm::monomial({2, 2}, idx({1, 1}), -1));
  CHECK(differential(DepthForm::generator({3}, 1, 2)).is_structurally_zero());
}

TEST_CASE("d_power examples") {
  const auto x = DepthForm::function({3}, x1);
  CHECK(d_power(x, 2) == DepthForm::generator({3}, 1, 2));
  CHECK(d_power(x, 3).is_structurally_zero());
  // x^2 on N=3: d^2 = 2x d2x
  CHECK(d_power(DepthForm::function({3}, x1 * x1), 2) == DepthForm::monomial({3}, idx({2}), 2 * x1));

  std::mt19937_64 rng(50);
  for (int t = 0; t < 10; ++t) CHECK(d_power(random_depth_form(rng, {2, 2}), 2).is_structurally_zero());

  const auto x5 = DepthForm::function({5}, x1);
  CHECK(d_power(x5, 4) == DepthForm::generator({5}, 1, 4));
  CHECK(d_power(x5, 5).is_structurally_zero());
  CHECK_THROWS_AS(d_power(x5, 0), DomainError);
}

TEST_CASE("one-variable d^k formula") {
  // d^k (f0 + sum f_i d^i x) = f0' d^k x + sum f_i d^{i+k} x, for k >= 1 and depth-raise only
  // (the f_i' dx d^i x terms vanish)
  const int N = 5;
  std::mt19937_64 rng(51);
  for (int t = 0; t < 10; ++t) {
    std::vector<ScalarExpr> f(N);
    DepthForm a({N});
    for (int i = 0; i < N; ++i) {
      f[static_cast<std::size_t>(i)] = testing::random_polynomial(rng, 1, 3, 2);
      a.add(idx({i}), f[static_cast<std::size_t>(i)]);
    }
    for (int k = 1; k < N; ++k) {
      DepthForm expected({N});
      expected.add(idx({k}), f[0].diff(1));
      for (int i = 1; i + k < N; ++i) expected.add(idx({i + k}), f[static_cast<std::size_t>(i)]);
      CHECK(d_power(a, k) == expected);
    }
  }
}

TEST_CASE("minimal_nilpotency examples") {
  CHECK(minimal_nilpotency({2}) == 2);
  CHECK(minimal_nilpotency({3}) == 3);
  CHECK(minimal_nilpotency({2, 2}) == 2);
  for (int N = 2; N <= 6; ++N) CHECK(minimal_nilpotency({N}) == N);
  CHECK_THROWS_AS(minimal_nilpotency({7, 6}), DomainError);
  CHECK_THROWS_AS(minimal_nilpotency({1}), DomainError);
}

TEST_CASE("affine pullback examples") {
  std::mt19937_64 rng(52);
  const auto a = random_depth_form(rng, {3, 3});
  CHECK(affine_pullback(AffineMap::identity(2), a) == a);

  RationalMatrix A2(1, 1);
  A2(0, 0) = 2;
  const AffineMap f(A2, {0});
  CHECK(affine_pullback(f, DepthForm::generator({3}, 1, 2)) == DepthForm::monomial({3}, idx({2}), 2));
  const auto sq = DepthForm::function({3}, x1 * x1);
  CHECK(differential(affine_pullback(f, sq)) == affine_pullback(f, differential(sq)));
  CHECK(differential(affine_pullback(f, sq)) == DepthForm::monomial({3}, idx({1}), 8 * x1));

  const auto g = testing::random_affine_map(rng, 2), h = testing::random_affine_map(rng, 2);
  CHECK(affine_pullback(compose(g, h), a) == affine_pullback(h, affine_pullback(g, a)));

  CHECK_THROWS_AS(AffineMap(RationalMatrix(2, 2), {0, 0}), DomainError);
  CHECK_THROWS_AS(affine_pullback(AffineMap::identity(2), DepthForm::generator({3, 2}, 1, 1)), DomainError);
}

TEST_CASE("chart_compatible examples") {
  std::mt19937_64 rng(53);
  const auto a = random_depth_form(rng, {3, 3});
  CHECK(chart_compatible(a, a, AffineMap::identity(2)));

  RationalMatrix D(2, 2);
  D(0, 0) = 2;
  D(1, 1) = 1;
  const AffineMap t(D, {0, 0});
  const auto dx1 = DepthForm::generator({3, 3}, 1, 1);
  CHECK(chart_compatible(DepthForm::monomial({3, 3}, idx({1, 0}), 2), dx1, t));
  CHECK_FALSE(chart_compatible(dx1, dx1, t));
}

TEST_CASE("property: multiply matches the transposition oracle and is associative") {
  std::mt19937_64 rng(54);
  for (const auto& p : small_profiles) {
    int total = 0;
    for (int n : p) total += n;
    if (total > 9) continue;
    for (int t = 0; t < 30; ++t) {
      const auto a = DepthForm::monomial(p, testing::random_depth_index(rng, p), testing::random_polynomial(rng, 2, 1, 1));
      const auto b = DepthForm::monomial(p, testing::random_depth_index(rng, p), 1);
      const auto c = DepthForm::monomial(p, testing::random_depth_index(rng, p), 1);
      CHECK(multiply(a, b) == testing::oracle_multiply(a, b));
      CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
  }
}

TEST_CASE("property: differential matches the Leibniz oracle") {
  std::mt19937_64 rng(55);
  for (const auto& p : small_profiles)
    for (int t = 0; t < 10; ++t) {
      const auto a = random_depth_form(rng, p, 4);
      CHECK(differential(a) == testing::oracle_differential(a));
    }
}

TEST_CASE("property: graded Leibniz rule") {
  std::mt19937_64 rng(56);
  for (const auto& p : small_profiles)
    for (int t = 0; t < 15; ++t) {
      const auto a = DepthForm::monomial(p, testing::random_depth_index(rng, p), testing::random_polynomial(rng, 3, 2, 2));
      const auto b = random_depth_form(rng, p);
      const int da = degree_of(a);
      const auto rhs = multiply(differential(a), b) + (da % 2 ? -multiply(a, differential(b)) : multiply(a, differential(b)));
      CHECK(differential(multiply(a, b)) == rhs);
    }
}

TEST_CASE("property: tensor bound on the probe set") {
  for (const auto& p : small_profiles) {
    int total = 0;
    for (int n : p) total += n;
    const int bound = total - static_cast<int>(p.size()) + 1;
    const int M = minimal_nilpotency(p);
    CHECK(M <= bound);
    for (const auto& probe : nilpotency_probes(p)) CHECK(d_power(probe, bound).is_structurally_zero());
  }
  CHECK(minimal_nilpotency({3, 2}) <= 4);
}

TEST_CASE("property: pullback is an algebra map commuting with d") {
  std::mt19937_64 rng(57);
  auto check_laws = [](const AffineMap& f, const AffineMap& g, const DepthForm& a, const DepthForm& b) {
    CHECK(affine_pullback(f, multiply(a, b)) == multiply(affine_pullback(f, a), affine_pullback(f, b)));
    CHECK(differential(affine_pullback(f, a)) == affine_pullback(f, differential(a)));
    CHECK(affine_pullback(compose(g, f), a) == affine_pullback(f, affine_pullback(g, a)));
  };
  // general invertible A on de Rham profiles
  for (const DepthProfile& p : {DepthProfile{2, 2}, DepthProfile{2, 2, 2}})
    for (int t = 0; t < 10; ++t) {
      const auto f = testing::random_affine_map(rng, p.size()), g = testing::random_affine_map(rng, p.size());
      check_laws(f, g, random_depth_form(rng, p), random_depth_form(rng, p));
    }
  // signed permutation times diagonal for deeper profiles
  auto monomial_map = [&](std::size_t k) {
    std::vector<std::size_t> perm(k);
    for (std::size_t i = 0; i < k; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> scale(1, 3), sign(0, 1), shift(-2, 2);
    RationalMatrix A(k, k);
    std::vector<Rational> b(k);
    for (std::size_t i = 0; i < k; ++i) {
      A(i, perm[i]) = Rational(sign(rng) ? scale(rng) : -scale(rng), scale(rng));
      b[i] = shift(rng);
    }
    return AffineMap(A, b);
  };
  for (const DepthProfile& p : {DepthProfile{3, 3}, DepthProfile{4, 4}, DepthProfile{3, 3, 3}})
    for (int t = 0; t < 10; ++t)
      check_laws(monomial_map(p.size()), monomial_map(p.size()), random_depth_form(rng, p), random_depth_form(rng, p));
}

TEST_CASE("mixing transitions break the depth relations") {
  // x1 -> x1 + x2 sends dx1 d2x1 = 0 to dx1 d2x2 + d2x1 dx2
  const DepthProfile p{3, 3};
  RationalMatrix A = RationalMatrix::identity(2);
  A(0, 1) = 1;
  const AffineMap f(A, {0, 0});
  const auto dx1 = DepthForm::generator(p, 1, 1), d2x1 = DepthForm::generator(p, 1, 2);
  const auto mixed = DepthForm::monomial(p, idx({1, 2})) + DepthForm::monomial(p, idx({2, 1}));
  CHECK(multiply(affine_pullback(f, dx1), affine_pullback(f, d2x1)) == mixed);
  CHECK(affine_pullback(f, multiply(dx1, d2x1)).is_structurally_zero());

  const auto a = DepthForm::monomial(p, idx({2, 0}), x1);
  CHECK(differential(affine_pullback(f, a)) == mixed);
  CHECK(affine_pullback(f, differential(a)).is_structurally_zero());
}

TEST_CASE("property: profile (2,...,2) is de Rham") {
  std::mt19937_64 rng(58);
  for (const DepthProfile& p : {DepthProfile{2, 2}, DepthProfile{2, 2, 2}, DepthProfile{2, 2, 2, 2}}) {
    const int k = static_cast<int>(p.size());
    for (int t = 0; t < 10; ++t) CHECK(d_power(random_depth_form(rng, p, 4), 2).is_structurally_zero());
    for (int i = 1; i <= k; ++i)
      for (int j = 1; j <= k; ++j) {
        const auto gi = DepthForm::generator(p, i, 1), gj = DepthForm::generator(p, j, 1);
        CHECK(multiply(gi, gj) == -multiply(gj, gi));
      }
  }
}
