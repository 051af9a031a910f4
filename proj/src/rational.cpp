#include "ndga/rational.hpp"

#include "ndga/error.hpp"

#include <cctype>

namespace ndga {

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const char* msg) -> Rational {
    throw ParseError(std::string(msg) + " in rational '" + std::string(text) + "'", pos);
  };
  std::string num;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') num.push_back('-');
    ++pos;
  }
  const std::size_t digits_start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) num.push_back(text[pos++]);
  if (pos == digits_start) return fail("expected digits");
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den.clear();
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) den.push_back(text[pos++]);
    if (den.empty()) return fail("expected denominator");
  }
  if (pos != text.size()) return fail("unexpected character");
  mpz_class d(den);
  if (d == 0) return fail("zero denominator");
  Rational q{mpz_class(num), d};
  q.canonicalize();
  return q;
}

} // namespace ndga
