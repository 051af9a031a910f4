#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ndga {

using Rational = mpq_class;

/// "3/4", "-2", "0".
std::string to_string(const Rational& q);

/// Accepts an optional sign, an integer, and an optional "/positive-integer".
Rational parse_rational(std::string_view text);

} // namespace ndga
