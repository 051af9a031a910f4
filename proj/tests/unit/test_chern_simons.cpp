#include "ndga/chern_simons.hpp"
#include "ndga/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ndga;

namespace {

constexpr Letter a = Letter::A, da = Letter::DA, h = Letter::H, dh = Letter::DH;

Rational q(long n, long d = 1) { return Rational(n, d); }

// Representative by rotating one letter at a time through the whole orbit.
std::pair<Word, int> orbit_oracle(const Word& w) {
  const int total = word_degree(w);
  Word cur = w;
  int sign = 1;
  Word best = w;
  int best_sign = 1;
  bool zero = false;
  for (std::size_t s = 1; s < w.size(); ++s) {
    const int first = letter_degree(cur.front());
    if ((first * (total - first)) % 2) sign = -sign;
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) {
      best = cur;
      best_sign = sign;
    }
  }
  cur = w;
  sign = 1;
  for (std::size_t s = 0; s < w.size(); ++s) {
    if (cur == best && sign != best_sign) zero = true;
    const int first = letter_degree(cur.front());
    if ((first * (total - first)) % 2) sign = -sign;
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
  }
  return {best, zero ? 0 : best_sign};
}

Word random_word(std::mt19937_64& rng, int max_len, bool with_variation) {
  std::uniform_int_distribution<int> len(1, max_len), letter(0, with_variation ? 3 : 1);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& l : w) l = static_cast<Letter>(letter(rng));
  return w;
}

FreeElement random_element(std::mt19937_64& rng, int terms, int max_len, bool with_variation) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
  FreeElement e;
  for (int t = 0; t < terms; ++t) e.add(random_word(rng, max_len, with_variation), Rational(num(rng), den(rng)));
  return e;
}

} // namespace

TEST_CASE("rendering") {
  CHECK(render_word({a, da}) == "w*dw");
  CHECK(render_word({a, a, a}) == "w^3");
  CHECK(render_word({a, da, da}) == "w*dw^2");
  CHECK(render_word({h, a, a}) == "h*w^2");
  CHECK(render_word({}) == "1");
  CHECK(render_lines(chern_simons_lagrangian(1)) == std::vector<std::string>{"1 w*dw", "2/3 w^3"});
}

TEST_CASE("expand_power examples") {
  CHECK(expand_power(1) == FreeElement::word({a, da}) + FreeElement::word({a, a, a}));
  const FreeElement k2 = FreeElement::word({a, da, da}) + FreeElement::word({a, da, a, a}) +
                         FreeElement::word({a, a, a, da}) + FreeElement::word({a, a, a, a, a});
  CHECK(expand_power(2) == k2);
  const auto k3 = expand_power(3);
  for (const auto& [w, c] : k3.terms()) CHECK(word_degree(w) == 7);
  CHECK_THROWS_AS(expand_power(0), DomainError);
}

TEST_CASE("property: expand_power enumerates every choice of dw or w^2 per factor") {
  for (int K = 1; K <= 6; ++K) {
    FreeElement oracle;
    for (unsigned mask = 0; mask < (1u << K); ++mask) {
      Word w{a};
      for (int f = 0; f < K; ++f) {
        if ((mask >> f) & 1u) {
          w.push_back(a);
          w.push_back(a);
        } else {
          w.push_back(da);
        }
      }
      oracle.add(w, 1);
    }
    CHECK(expand_power(K) == oracle);
  }
}

TEST_CASE("sharp_inverse examples") {
  CHECK(sharp_inverse(FreeElement::word({a, da, da})).coefficient({a, da, da}) == q(1, 3));
  CHECK(sharp_inverse(FreeElement::word({a, a, a, a, a})).coefficient({a, a, a, a, a}) == q(1, 5));
  CHECK_THROWS_AS(sharp_inverse(FreeElement::word({}) + FreeElement::word({a})), DomainError);
}

TEST_CASE("cyclic_normal_form examples") {
  CHECK(cyclic_representative({a, da, a, a}) == std::pair<Word, int>{{a, a, a, da}, 1});
  CHECK(cyclic_representative({da}) == std::pair<Word, int>{{da}, 1});
  CHECK(cyclic_representative({da, a}) == std::pair<Word, int>{{a, da}, 1});
  CHECK(cyclic_representative({a, a}).second == 0);
  CHECK(cyclic_representative({a, a, a, a}).second == 0);
  CHECK(cyclic_representative({a, a, a}) == std::pair<Word, int>{{a, a, a}, 1});
  CHECK(cyclic_representative({da, h}) == std::pair<Word, int>{{da, h}, 1});
  CHECK(cyclic_representative({h, a}) == std::pair<Word, int>{{a, h}, -1});
}

TEST_CASE("chern_simons_lagrangian tables") {
  const auto k1 = chern_simons_lagrangian(1);
  CHECK(k1 == FreeElement::word({a, da}) + FreeElement::word({a, a, a}, q(2, 3)));

  const auto k2 = chern_simons_lagrangian(2);
  CHECK(k2.terms().size() == 3);
  CHECK(k2.coefficient({a, da, da}) == q(4, 3));
  CHECK(k2.coefficient({a, a, a, da}) == 2);
  CHECK(k2.coefficient({a, a, a, a, a}) == q(4, 5));

  const auto k3 = chern_simons_lagrangian(3);
  CHECK(k3.terms().size() == 4);
  CHECK(k3.coefficient({a, da, da, da}) == q(3, 2));
  CHECK(k3.coefficient({a, a, a, da, da}) == q(18, 5));
  CHECK(k3.coefficient({a, a, a, a, a, da}) == 3);
  CHECK(k3.coefficient(Word(7, a)) == q(6, 7));

  const auto k4 = chern_simons_lagrangian(4);
  std::vector<Rational> coefficients;
  for (const auto& [w, c] : ordered_terms(k4)) coefficients.push_back(c);
  CHECK(coefficients == std::vector<Rational>{q(8, 5), q(16, 3), q(48, 7), q(4), q(8, 9)});
}

TEST_CASE("chern_simons_classes keeps distinct cyclic classes apart") {
  CHECK(chern_simons_classes(2) == chern_simons_lagrangian(2));
  const auto k3 = chern_simons_classes(3);
  CHECK(k3.terms().size() == 5);
  CHECK(k3.coefficient({a, a, a, da, da}) == q(12, 5));
  CHECK(k3.coefficient({a, a, da, a, da}) == q(6, 5));
  for (int K = 1; K <= 5; ++K) CHECK(letter_count_totals(chern_simons_classes(K)) == chern_simons_lagrangian(K));
}

TEST_CASE("free_d examples") {
  CHECK(free_d(FreeElement::letter(a)) == FreeElement::letter(da));
  CHECK(free_d(FreeElement::word({a, a})) == FreeElement::word({da, a}) - FreeElement::word({a, da}));
  CHECK(free_d(free_d(FreeElement::word({a, a, a}))).is_zero());
  CHECK(free_d(FreeElement::word({h, da})) == FreeElement::word({dh, da}));
}

TEST_CASE("formal_variation examples") {
  CHECK(linear_variation(FreeElement::word({})).is_zero());
  CHECK(linear_variation(FreeElement::word({h, dh})).is_zero());

  // hand reduction for K = 1: h*dw + w*dh + 2 h*w^2, and w*dh = h*dw - d(h*w)
  const auto v1 = formal_variation(1);
  CHECK(v1.target_nonzero);
  REQUIRE(v1.constant.has_value());
  CHECK(*v1.constant == 2);

  const auto v2 = formal_variation(2);
  CHECK(v2.target_nonzero);
  REQUIRE(v2.constant.has_value());
  CHECK(*v2.constant != 0);
  MESSAGE("K = 2 constant: " << to_string(*v2.constant));
  CHECK_THROWS_AS(formal_variation(4), DomainError);
}

TEST_CASE("property: cyclic representative matches the orbit oracle") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 500; ++t) {
    const Word w = random_word(rng, 7, true);
    CHECK(cyclic_representative(w) == orbit_oracle(w));
  }
}

TEST_CASE("property: cyclic_normal_form is a linear idempotent projection") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_element(rng, 5, 6, true);
    const auto y = random_element(rng, 5, 6, true);
    const auto nx = cyclic_normal_form(x);
    CHECK(cyclic_normal_form(nx) == nx);
    CHECK(cyclic_normal_form(x + q(3, 2) * y) == nx + q(3, 2) * cyclic_normal_form(y));
  }
}

TEST_CASE("property: sharp undoes sharp_inverse") {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 100; ++t) {
    const auto x = random_element(rng, 6, 7, false);
    CHECK(sharp(sharp_inverse(x)) == x);
    CHECK(sharp_inverse(sharp(x)) == x);
  }
}

TEST_CASE("property: free_d squares to zero and is a graded derivation") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 200; ++t) {
    const Word u = random_word(rng, 5, true);
    const auto x = FreeElement::word(u);
    const auto y = random_element(rng, 3, 5, true);
    CHECK(free_d(free_d(x + y)).is_zero());
    const auto rhs = free_d(x) * y + (word_degree(u) % 2 ? -(x * free_d(y)) : x * free_d(y));
    CHECK(free_d(x * y) == rhs);
  }
}

TEST_CASE("property: lagrangian classes and the top coefficient") {
  for (int K = 1; K <= 6; ++K) {
    const auto cs = chern_simons_lagrangian(K);
    CHECK(cs.terms().size() == static_cast<std::size_t>(K + 1));
    std::vector<int> seen;
    for (const auto& [w, c] : cs.terms()) {
      const auto as = std::count(w.begin(), w.end(), a);
      const auto das = std::count(w.begin(), w.end(), da);
      CHECK(as % 2 == 1);
      CHECK(as + 2 * das == 2 * K + 1);
      seen.push_back(static_cast<int>(das));
    }
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
    CHECK(cs.coefficient(Word(static_cast<std::size_t>(2 * K + 1), a)) == q(2 * K, 2 * K + 1));
  }
}
