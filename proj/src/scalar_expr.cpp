#include "ndga/scalar_expr.hpp"

#include "ndga/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <sstream>

namespace ndga {

namespace {

int kind_rank(Atom::Kind k) { return static_cast<int>(k); }

int cmp_rational(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return (c > 0) - (c < 0);
}

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && compare(a[i].first, b[j].first) < 0)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || compare(b[j].first, a[i].first) < 0) {
      out.push_back(b[j++]);
    } else {
      const int e = a[i].second + b[j].second;
      if (e != 0) out.emplace_back(a[i].first, e);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string render_atom(const Atom& a) {
  switch (a.kind) {
  case Atom::Kind::Variable: return "x" + std::to_string(a.variable);
  case Atom::Kind::Sin: return "sin(" + a.argument->str() + ")";
  case Atom::Kind::Cos: return "cos(" + a.argument->str() + ")";
  }
  return {};
}

std::string render_monomial(const Monomial& m) {
  std::string out;
  for (std::size_t k = 0; k < m.size(); ++k) {
    if (k) out += '*';
    out += render_atom(m[k].first);
    if (m[k].second != 1) out += "^" + std::to_string(m[k].second);
  }
  return out;
}

double atom_double(const Atom& a, std::span<const double> x) {
  switch (a.kind) {
  case Atom::Kind::Variable:
    return a.variable <= static_cast<int>(x.size()) ? x[a.variable - 1] : std::nan("");
  case Atom::Kind::Sin: return std::sin(a.argument->eval_double(x));
  case Atom::Kind::Cos: return std::cos(a.argument->eval_double(x));
  }
  return std::nan("");
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  ScalarExpr parse_all() {
    ScalarExpr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("syntax error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string digits() {
    skip_ws();
    std::string d;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d.push_back(text_[pos_++]);
    return d;
  }

  ScalarExpr expr() {
    bool negate = false;
    if (peek('-')) {
      negate = true;
      ++pos_;
    } else if (peek('+')) {
      ++pos_;
    }
    ScalarExpr e = term();
    if (negate) e = -e;
    for (;;) {
      if (peek('+')) {
        ++pos_;
        e += term();
      } else if (peek('-')) {
        ++pos_;
        e -= term();
      } else {
        return e;
      }
    }
  }

  ScalarExpr term() {
    ScalarExpr e = factor();
    while (peek('*')) {
      ++pos_;
      e *= factor();
    }
    return e;
  }

  ScalarExpr factor() {
    ScalarExpr b = base();
    if (!peek('^')) return b;
    ++pos_;
    bool negative = false;
    if (peek('-')) {
      negative = true;
      ++pos_;
    }
    const std::string d = digits();
    if (d.empty()) fail("expected integer exponent");
    if (d.size() > 6) fail("exponent too large");
    const int n = std::stoi(d);
    try {
      return b.pow(negative ? -n : n);
    } catch (const DomainError& err) {
      fail(err.what());
    }
  }

  ScalarExpr base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ScalarExpr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::string num = digits();
      std::string den = "1";
      if (peek('/')) {
        ++pos_;
        den = digits();
        if (den.empty()) fail("expected denominator");
        if (mpz_class(den) == 0) fail("zero denominator");
      }
      Rational q{mpz_class(num), mpz_class(den)};
      q.canonicalize();
      return ScalarExpr(q);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      std::string ident;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ident.push_back(text_[pos_++]);
      if (ident == "x") {
        std::string d;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) d.push_back(text_[pos_++]);
        if (d.empty() || d.size() > 6 || std::stoi(d) < 1) {
          pos_ = start;
          fail("coordinate must be written x<positive integer>");
        }
        return ScalarExpr::variable(std::stoi(d));
      }
      if (ident == "sin" || ident == "cos") {
        expect('(');
        ScalarExpr arg = expr();
        expect(')');
        return ident == "sin" ? sin(arg) : cos(arg);
      }
      pos_ = start;
      throw ParseError("unknown identifier '" + ident + "' at offset " + std::to_string(start), start);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

int compare(const Atom& a, const Atom& b) {
  if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind) ? -1 : 1;
  if (a.kind == Atom::Kind::Variable) return (a.variable > b.variable) - (a.variable < b.variable);
  return compare(*a.argument, *b.argument);
}

int compare(const Monomial& a, const Monomial& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    if (int c = compare(a[k].first, b[k].first)) return c;
    if (a[k].second != b[k].second) return a[k].second < b[k].second ? -1 : 1;
  }
  return (a.size() > b.size()) - (a.size() < b.size());
}

int compare(const ScalarExpr& a, const ScalarExpr& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (int c = compare(ia->first, ib->first)) return c;
    if (int c = cmp_rational(ia->second, ib->second)) return c;
  }
  if (ia == a.terms_.end()) return ib == b.terms_.end() ? 0 : -1;
  return 1;
}

double Number::to_double() const {
  if (is_exact()) return rational().get_d();
  return std::get<double>(value_);
}

std::string Number::str() const {
  if (is_exact()) return to_string(rational());
  std::ostringstream os;
  os.precision(17);
  os << std::get<double>(value_);
  return os.str();
}

ScalarExpr::ScalarExpr(const Rational& q) {
  if (q != 0) {
    Rational c = q;
    c.canonicalize();
    terms_.emplace(Monomial{}, std::move(c));
  }
}

ScalarExpr ScalarExpr::variable(int index) {
  if (index < 1) throw DomainError("coordinate index must be positive");
  Atom a;
  a.kind = Atom::Kind::Variable;
  a.variable = index;
  return from_monomial(Monomial{{a, 1}}, 1);
}

ScalarExpr ScalarExpr::from_monomial(Monomial m, Rational c) {
  ScalarExpr e;
  c.canonicalize();
  if (c != 0) e.terms_.emplace(std::move(m), std::move(c));
  return e;
}

void ScalarExpr::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<Rational> ScalarExpr::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.empty()) return terms_.begin()->second;
  return std::nullopt;
}

bool ScalarExpr::is_polynomial() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [atom, e] : m)
      if (atom.kind != Atom::Kind::Variable) return false;
  return true;
}

int ScalarExpr::max_variable() const {
  const auto vars = variables();
  return vars.empty() ? 0 : vars.back();
}

std::vector<int> ScalarExpr::variables() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& [atom, e] : m) {
      if (atom.kind == Atom::Kind::Variable) {
        out.push_back(atom.variable);
      } else {
        const auto inner = atom.argument->variables();
        out.insert(out.end(), inner.begin(), inner.end());
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ScalarExpr ScalarExpr::operator-() const {
  ScalarExpr out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ScalarExpr& ScalarExpr::operator+=(const ScalarExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ScalarExpr& ScalarExpr::operator-=(const ScalarExpr& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ScalarExpr operator*(const ScalarExpr& a, const ScalarExpr& b) {
  ScalarExpr out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

ScalarExpr& ScalarExpr::operator*=(const ScalarExpr& rhs) { return *this = *this * rhs; }

ScalarExpr ScalarExpr::pow(int exponent) const {
  if (exponent < 0) {
    if (terms_.size() != 1)
      throw DomainError("negative power is only defined for a single nonzero term");
    const auto& [m, c] = *terms_.begin();
    Monomial inv = m;
    for (auto& f : inv) f.second = -f.second;
    Rational ci = 1 / c;
    return ScalarExpr::from_monomial(std::move(inv), ci).pow(-exponent);
  }
  if (terms_.size() == 1) {
    const auto& [m, c] = *terms_.begin();
    Monomial p = m;
    for (auto& f : p) f.second *= exponent;
    if (exponent == 0) p.clear();
    Rational cp = 1;
    for (int k = 0; k < exponent; ++k) cp *= c;
    return from_monomial(std::move(p), cp);
  }
  ScalarExpr result(1);
  ScalarExpr base = *this;
  int n = exponent;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n) base *= base;
  }
  return result;
}

ScalarExpr sin(const ScalarExpr& arg) {
  if (arg.is_structurally_zero()) return {};
  if (arg.terms_.begin()->second < 0) return -sin(-arg);
  Atom a;
  a.kind = Atom::Kind::Sin;
  a.argument = std::make_shared<const ScalarExpr>(arg);
  return ScalarExpr::from_monomial(Monomial{{a, 1}}, 1);
}

ScalarExpr cos(const ScalarExpr& arg) {
  if (arg.is_structurally_zero()) return ScalarExpr(1);
  if (arg.terms_.begin()->second < 0) return cos(-arg);
  Atom a;
  a.kind = Atom::Kind::Cos;
  a.argument = std::make_shared<const ScalarExpr>(arg);
  return ScalarExpr::from_monomial(Monomial{{a, 1}}, 1);
}

ScalarExpr ScalarExpr::diff(int index) const {
  if (index < 1) throw DomainError("coordinate index must be positive");
  ScalarExpr out;
  for (const auto& [m, c] : terms_) {
    for (std::size_t k = 0; k < m.size(); ++k) {
      const auto& [atom, e] = m[k];
      ScalarExpr inner;
      switch (atom.kind) {
      case Atom::Kind::Variable:
        if (atom.variable != index) continue;
        inner = ScalarExpr(1);
        break;
      case Atom::Kind::Sin: {
        ScalarExpr da = atom.argument->diff(index);
        if (da.is_structurally_zero()) continue;
        inner = cos(*atom.argument) * da;
        break;
      }
      case Atom::Kind::Cos: {
        ScalarExpr da = atom.argument->diff(index);
        if (da.is_structurally_zero()) continue;
        inner = -(sin(*atom.argument) * da);
        break;
      }
      }
      Monomial rest = m;
      if (e == 1) {
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
      } else {
        rest[k].second = e - 1;
      }
      out += from_monomial(std::move(rest), c * e) * inner;
    }
  }
  return out;
}

ScalarExpr ScalarExpr::substitute(const std::map<int, ScalarExpr>& values) const {
  ScalarExpr out;
  for (const auto& [m, c] : terms_) {
    ScalarExpr term(c);
    for (const auto& [atom, e] : m) {
      ScalarExpr base;
      switch (atom.kind) {
      case Atom::Kind::Variable: {
        auto it = values.find(atom.variable);
        if (it == values.end()) {
          base = variable(atom.variable);
        } else {
          base = it->second;
        }
        break;
      }
      case Atom::Kind::Sin: base = sin(atom.argument->substitute(values)); break;
      case Atom::Kind::Cos: base = cos(atom.argument->substitute(values)); break;
      }
      term *= base.pow(e);
    }
    out += term;
  }
  return out;
}

Number ScalarExpr::eval(const Point& point) const {
  bool exact = is_polynomial();
  for (int i : variables()) {
    auto it = point.find(i);
    if (it == point.end()) throw DomainError("x" + std::to_string(i) + " is unassigned");
    if (!std::holds_alternative<Rational>(it->second)) exact = false;
  }
  const int n = max_variable();
  if (exact) {
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
      Rational t = c;
      for (const auto& [atom, e] : m) {
        const Rational& v = std::get<Rational>(point.at(atom.variable));
        if (e < 0 && v == 0) throw DomainError("negative power of zero at x" + std::to_string(atom.variable));
        Rational p = 1;
        for (int k = 0; k < std::abs(e); ++k) p *= v;
        if (e < 0) p = 1 / p;
        t *= p;
      }
      sum += t;
    }
    return Number(sum);
  }
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (const auto& [i, v] : point) {
    if (i >= 1 && i <= n) x[i - 1] = std::holds_alternative<Rational>(v) ? std::get<Rational>(v).get_d() : std::get<double>(v);
  }
  const double value = eval_double(x);
  if (!std::isfinite(value)) throw DomainError("expression is singular at the given point");
  return Number(value);
}

double ScalarExpr::eval_double(std::span<const double> x) const {
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (const auto& [atom, e] : m) t *= std::pow(atom_double(atom, x), e);
    sum += t;
  }
  return sum;
}

std::string ScalarExpr::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string t;
    if (m.empty()) {
      t = to_string(c);
    } else if (c == 1) {
      t = render_monomial(m);
    } else if (c == -1) {
      t = "-" + render_monomial(m);
    } else {
      t = to_string(c) + "*" + render_monomial(m);
    }
    if (first) {
      out = t;
      first = false;
    } else if (t[0] == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out;
}

ScalarExpr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string render(const ScalarExpr& e) { return e.str(); }

ScalarExpr diff(const ScalarExpr& e, int index) { return e.diff(index); }

Number eval(const ScalarExpr& e, const Point& point) { return e.eval(point); }

bool is_zero(const ScalarExpr& e, const ZeroTest& test) {
  if (e.is_structurally_zero()) return true;
  if (e.is_polynomial()) return false;
  const int n = std::max(1, e.max_variable());
  std::mt19937_64 rng(test.seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(n));
  int accepted = 0;
  for (int attempt = 0; accepted < test.points && attempt < 64 * test.points; ++attempt) {
    for (auto& xi : x) xi = dist(rng);
    const double v = e.eval_double(x);
    if (!std::isfinite(v)) continue;
    if (std::abs(v) >= test.tolerance) return false;
    ++accepted;
  }
  return accepted == test.points;
}

} // namespace ndga
