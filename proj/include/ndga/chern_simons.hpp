#pragma once

// Words in the free graded algebra on w (degree 1), dw (degree 2) and a
// variation h, dh of the same degrees, with the operations that produce the
// Chern-Simons Lagrangians w(dw + w^2)^K.

#include "ndga/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ndga {

/// Letter order a < da < h < dh is the order used for cyclic representatives.
enum class Letter : std::uint8_t { A, DA, H, DH };

int letter_degree(Letter l);

using Word = std::vector<Letter>;

int word_degree(const Word& w);
/// "w*dw^2", "h*w^2"; the empty word is "1".
std::string render_word(const Word& w);

/// Finite rational combination of words; no zero coefficients stored.
class FreeElement {
public:
  using Terms = std::map<Word, Rational>;

  FreeElement() = default;
  static FreeElement letter(Letter l);
  static FreeElement word(Word w, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Word& w) const;
  void add(const Word& w, const Rational& c);

  FreeElement operator-() const;
  FreeElement& operator+=(const FreeElement& rhs);
  FreeElement& operator-=(const FreeElement& rhs);
  FreeElement& operator*=(const Rational& c);
  friend FreeElement operator+(FreeElement a, const FreeElement& b) { return a += b; }
  friend FreeElement operator-(FreeElement a, const FreeElement& b) { return a -= b; }
  friend FreeElement operator*(FreeElement a, const Rational& c) { return a *= c; }
  friend FreeElement operator*(const Rational& c, FreeElement a) { return a *= c; }
  /// Concatenation product.
  friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
  friend bool operator==(const FreeElement& a, const FreeElement& b) { return a.terms_ == b.terms_; }

private:
  Terms terms_;
};

/// Terms ordered for display: more differentiated letters first, then by word.
std::vector<std::pair<Word, Rational>> ordered_terms(const FreeElement& e);

/// One "coefficient word" line per term in display order.
std::vector<std::string> render_lines(const FreeElement& e);

/// w (dw + w^2)^K expanded, K >= 1.
FreeElement expand_power(int K);

/// Multiplies each word's coefficient by its letter count.
FreeElement sharp(const FreeElement& e);
/// Divides each word's coefficient by its letter count. Throws DomainError
/// on the empty word.
FreeElement sharp_inverse(const FreeElement& e);

/// Least rotation of `w` and the sign relating w to it under graded
/// cyclicity. Sign 0 means the class is zero (w is its own negative).
std::pair<Word, int> cyclic_representative(const Word& w);
FreeElement cyclic_normal_form(const FreeElement& e);

/// Collects words by letter counts: each word becomes w^i dw^j h^k dh^l.
FreeElement letter_count_totals(const FreeElement& e);

/// 2K times the cyclic normal form of sharp_inverse(expand_power(K)).
FreeElement chern_simons_classes(int K);

/// chern_simons_classes(K) collected by letter counts, one term w^(2j+1) dw^(K-j)
/// per j. For K >= 3 several distinct cyclic classes share letter counts.
FreeElement chern_simons_lagrangian(int K);

/// Graded derivation with d(w) = dw, d(h) = dh, d(dw) = d(dh) = 0.
FreeElement free_d(const FreeElement& e);

/// Part of e(w + t h) linear in t.
FreeElement linear_variation(const FreeElement& e);

struct FormalVariation {
  FreeElement variation;      // cyclic normal form of the linear part of cs(w + t h)
  FreeElement target;         // cyclic normal form of h (dw + w^2)^K
  bool target_nonzero = false; // target not in the span of exact classes
  std::optional<Rational> constant; // variation = constant * target modulo exact classes
};

/// First variation of chern_simons_classes(K) modulo graded cyclicity and
/// the image of free_d, compared with h (dw + w^2)^K. K in {1, 2, 3}.
FormalVariation formal_variation(int K);

} // namespace ndga
