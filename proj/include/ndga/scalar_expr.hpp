#pragma once

#include "ndga/rational.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace ndga {

class ScalarExpr;

/// Indivisible factor of a monomial: a coordinate x_i, sin(e) or cos(e).
struct Atom {
  enum class Kind : std::uint8_t { Variable, Sin, Cos };

  Kind kind = Kind::Variable;
  int variable = 0;                           // 1-based, Kind::Variable only
  std::shared_ptr<const ScalarExpr> argument; // Kind::Sin / Kind::Cos only
};

int compare(const Atom& a, const Atom& b);

/// Sorted by atom, one entry per atom, exponents never zero. Negative
/// exponents are only produced by `pow` on a single-term expression.
using Monomial = std::vector<std::pair<Atom, int>>;

int compare(const Monomial& a, const Monomial& b);

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

/// Exact rational or double. Coordinates may be assigned either.
using PointValue = std::variant<Rational, double>;
using Point = std::map<int, PointValue>;

class Number {
public:
  Number(Rational q) : value_(std::move(q)) {}
  Number(double x) : value_(x) {}

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double to_double() const;
  std::string str() const;

private:
  std::variant<Rational, double> value_;
};

/// Parameters of the randomized zero test used for transcendental
/// expressions. Polynomial expressions are always decided exactly.
struct ZeroTest {
  std::uint64_t seed = 20180926;
  int points = 8;
  double tolerance = 1e-9;
};

/// Real-valued coefficient function of finitely many coordinates, closed
/// under +, *, integer powers, sin, cos and partial differentiation.
///
/// Values are kept fully expanded as a map from monomials over atoms to
/// rational coefficients, so two polynomial expressions are equal exactly
/// when their term maps are equal. Trigonometric identities are not applied;
/// use `is_zero` to certify those.
class ScalarExpr {
public:
  using Terms = std::map<Monomial, Rational, MonomialLess>;

  ScalarExpr() = default;
  ScalarExpr(const Rational& q);
  ScalarExpr(long value) : ScalarExpr(Rational(value)) {}
  ScalarExpr(int value) : ScalarExpr(Rational(value)) {}

  static ScalarExpr variable(int index);

  const Terms& terms() const { return terms_; }
  bool is_structurally_zero() const { return terms_.empty(); }
  std::optional<Rational> constant_value() const;
  /// True when no sin/cos atom occurs (negative variable exponents allowed).
  bool is_polynomial() const;
  /// Largest coordinate index referenced anywhere, 0 for constants.
  int max_variable() const;
  /// Sorted coordinate indices referenced anywhere, including inside sin/cos.
  std::vector<int> variables() const;
  std::size_t term_count() const { return terms_.size(); }

  ScalarExpr diff(int index) const;
  ScalarExpr pow(int exponent) const;
  /// Replaces coordinates by expressions; unmapped coordinates are kept.
  ScalarExpr substitute(const std::map<int, ScalarExpr>& values) const;

  Number eval(const Point& point) const;
  /// Double evaluation with x[i-1] assigned to x_i. Returns a non-finite
  /// value at singular points instead of throwing.
  double eval_double(std::span<const double> x) const;

  std::string str() const;

  ScalarExpr operator-() const;
  ScalarExpr& operator+=(const ScalarExpr& rhs);
  ScalarExpr& operator-=(const ScalarExpr& rhs);
  ScalarExpr& operator*=(const ScalarExpr& rhs);

  friend ScalarExpr operator+(ScalarExpr a, const ScalarExpr& b) { return a += b; }
  friend ScalarExpr operator-(ScalarExpr a, const ScalarExpr& b) { return a -= b; }
  friend ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b);
  friend bool operator==(const ScalarExpr& a, const ScalarExpr& b) { return compare(a, b) == 0; }
  friend bool operator<(const ScalarExpr& a, const ScalarExpr& b) { return compare(a, b) < 0; }
  friend int compare(const ScalarExpr& a, const ScalarExpr& b);

  friend ScalarExpr sin(const ScalarExpr& arg);
  friend ScalarExpr cos(const ScalarExpr& arg);

private:
  static ScalarExpr from_monomial(Monomial m, Rational c);
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

ScalarExpr sin(const ScalarExpr& arg);
ScalarExpr cos(const ScalarExpr& arg);

/// Parses the expression grammar:
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' ['-'] integer)?
///   base   := rational | 'x' positive-integer | 'sin(' expr ')' | 'cos(' expr ')' | '(' expr ')'
/// Whitespace is insignificant. Throws ParseError with the byte offset.
ScalarExpr parse(std::string_view text);

/// Text form accepted back by `parse`.
std::string render(const ScalarExpr& e);

ScalarExpr diff(const ScalarExpr& e, int index);
Number eval(const ScalarExpr& e, const Point& point);

/// Exact for polynomial expressions; otherwise evaluates at `test.points`
/// seeded points of [-1,1]^n and reports zero iff every |value| is below
/// `test.tolerance`.
bool is_zero(const ScalarExpr& e, const ZeroTest& test = {});

} // namespace ndga
