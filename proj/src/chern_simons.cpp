#include "ndga/chern_simons.hpp"

#include "ndga/error.hpp"
#include "ndga/rational_matrix.hpp"

#include <algorithm>
#include <set>

namespace ndga {

int letter_degree(Letter l) { return (l == Letter::A || l == Letter::H) ? 1 : 2; }

int word_degree(const Word& w) {
  int d = 0;
  for (Letter l : w) d += letter_degree(l);
  return d;
}

std::string render_word(const Word& w) {
  if (w.empty()) return "1";
  static const char* names[] = {"w", "dw", "h", "dh"};
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += '*';
    out += names[static_cast<int>(w[i])];
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out;
}

FreeElement FreeElement::letter(Letter l) { return word({l}); }

FreeElement FreeElement::word(Word w, const Rational& c) {
  FreeElement e;
  e.add(w, c);
  return e;
}

Rational FreeElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FreeElement::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  Rational v = c;
  v.canonicalize();
  auto [it, inserted] = terms_.try_emplace(w, v);
  if (!inserted) it->second += v;
  if (it->second == 0) terms_.erase(it);
}

FreeElement FreeElement::operator-() const {
  FreeElement r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

FreeElement& FreeElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b) {
  FreeElement r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add(w, ca * cb);
    }
  return r;
}

std::vector<std::pair<Word, Rational>> ordered_terms(const FreeElement& e) {
  std::vector<std::pair<Word, Rational>> out(e.terms().begin(), e.terms().end());
  auto differentiated = [](const Word& w) {
    return std::count_if(w.begin(), w.end(), [](Letter l) { return letter_degree(l) == 2; });
  };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    return differentiated(x.first) > differentiated(y.first);
  });
  return out;
}

std::vector<std::string> render_lines(const FreeElement& e) {
  std::vector<std::string> lines;
  for (const auto& [w, c] : ordered_terms(e)) lines.push_back(to_string(c) + " " + render_word(w));
  return lines;
}

FreeElement expand_power(int K) {
  if (K < 1) throw DomainError("expand_power needs K >= 1");
  const FreeElement a = FreeElement::letter(Letter::A);
  const FreeElement F = FreeElement::letter(Letter::DA) + a * a;
  FreeElement r = a;
  for (int i = 0; i < K; ++i) r = r * F;
  return r;
}

FreeElement sharp(const FreeElement& e) {
  FreeElement r;
  for (const auto& [w, c] : e.terms()) r.add(w, c * static_cast<long>(w.size()));
  return r;
}

FreeElement sharp_inverse(const FreeElement& e) {
  FreeElement r;
  for (const auto& [w, c] : e.terms()) {
    if (w.empty()) throw DomainError("sharp_inverse is undefined on the empty word");
    r.add(w, c / Rational(static_cast<long>(w.size())));
  }
  return r;
}

std::pair<Word, int> cyclic_representative(const Word& w) {
  if (w.size() < 2) return {w, 1};
  const int total = word_degree(w);
  Word best = w;
  int best_sign = 1;
  bool conflict = false;
  int prefix_degree = 0;
  for (std::size_t s = 1; s < w.size(); ++s) {
    // moving the prefix w[0..s) to the back costs (-1)^{|prefix| |rest|}
    prefix_degree += letter_degree(w[s - 1]);
    const int sign = (prefix_degree * (total - prefix_degree)) % 2 ? -1 : 1;
    Word rot(w.begin() + static_cast<std::ptrdiff_t>(s), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s));
    if (rot < best) {
      best = std::move(rot);
      best_sign = sign;
      conflict = false;
    } else if (rot == best && sign != best_sign) {
      conflict = true;
    }
  }
  return {best, conflict ? 0 : best_sign};
}

FreeElement cyclic_normal_form(const FreeElement& e) {
  FreeElement r;
  for (const auto& [w, c] : e.terms()) {
    auto [rep, sign] = cyclic_representative(w);
    if (sign != 0) r.add(rep, sign * c);
  }
  return r;
}

FreeElement letter_count_totals(const FreeElement& e) {
  FreeElement r;
  for (const auto& [w, c] : e.terms()) {
    Word sorted = w;
    std::sort(sorted.begin(), sorted.end());
    r.add(sorted, c);
  }
  return r;
}

FreeElement chern_simons_classes(int K) {
  return cyclic_normal_form(sharp_inverse(expand_power(K))) * Rational(2 * K);
}

FreeElement chern_simons_lagrangian(int K) { return letter_count_totals(chern_simons_classes(K)); }

FreeElement free_d(const FreeElement& e) {
  FreeElement r;
  for (const auto& [w, c] : e.terms()) {
    int before = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == Letter::A || w[i] == Letter::H) {
        Word v = w;
        v[i] = w[i] == Letter::A ? Letter::DA : Letter::DH;
        r.add(v, before % 2 ? -c : c);
      }
      before += letter_degree(w[i]);
    }
  }
  return r;
}

FreeElement linear_variation(const FreeElement& e) {
  FreeElement r;
  for (const auto& [w, c] : e.terms())
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] != Letter::A && w[i] != Letter::DA) continue;
      Word v = w;
      v[i] = w[i] == Letter::A ? Letter::H : Letter::DH;
      r.add(v, c);
    }
  return r;
}

namespace {

// Words of the given degree over {a, da, h, dh} with exactly one of h, dh.
void words_with_one_variation(int degree, Word& prefix, bool used, std::vector<Word>& out) {
  if (degree == 0) {
    if (used) out.push_back(prefix);
    return;
  }
  for (Letter l : {Letter::A, Letter::DA, Letter::H, Letter::DH}) {
    const bool var = l == Letter::H || l == Letter::DH;
    if (var && used) continue;
    if (letter_degree(l) > degree) continue;
    prefix.push_back(l);
    words_with_one_variation(degree - letter_degree(l), prefix, used || var, out);
    prefix.pop_back();
  }
}

} // namespace

FormalVariation formal_variation(int K) {
  if (K < 1 || K > 3) throw DomainError("formal_variation supports K in {1, 2, 3}");
  FormalVariation out;
  out.variation = cyclic_normal_form(linear_variation(chern_simons_classes(K)));
  const FreeElement a = FreeElement::letter(Letter::A);
  FreeElement target = FreeElement::letter(Letter::H);
  for (int i = 0; i < K; ++i) target = target * (FreeElement::letter(Letter::DA) + a * a);
  out.target = cyclic_normal_form(target);

  std::vector<FreeElement> columns;
  std::vector<Word> sources;
  Word prefix;
  words_with_one_variation(2 * K, prefix, false, sources);
  for (const auto& w : sources) {
    auto x = cyclic_normal_form(free_d(FreeElement::word(w)));
    if (!x.is_zero()) columns.push_back(std::move(x));
  }
  const std::size_t exact_count = columns.size();
  columns.push_back(out.target);
  columns.push_back(out.variation);

  std::set<Word> basis_set;
  for (const auto& c : columns)
    for (const auto& [w, v] : c.terms()) basis_set.insert(w);
  const std::vector<Word> basis(basis_set.begin(), basis_set.end());

  RationalMatrix m(basis.size(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < basis.size(); ++i) m(i, j) = columns[j].coefficient(basis[i]);
  const auto pivots = m.row_reduce();

  const std::size_t target_col = exact_count, variation_col = exact_count + 1;
  auto pivot_row = [&](std::size_t col) -> std::optional<std::size_t> {
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (pivots[r] == col) return r;
    return std::nullopt;
  };
  const auto target_row = pivot_row(target_col);
  out.target_nonzero = target_row.has_value();
  if (out.target_nonzero && !pivot_row(variation_col)) out.constant = m(*target_row, variation_col);
  return out;
}

} // namespace ndga
