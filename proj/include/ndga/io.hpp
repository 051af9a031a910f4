#pragma once

// Text formats for connections, metrics and finite N-complexes. Lines are
// trimmed, '#' starts a comment, blank lines are skipped. Errors are
// ParseError with a 1-based line number.
//
//   connection:  base <n> / fiber <m> / { omega <i> / m rows of m entries separated by ';' }
//   metric:      dim <n> / n rows of n entries separated by ';' / [ inverse / n rows ]
//   complex:     N <order> / { deg <i> dim <n_i> / n_{i+1} rows of n_i fractions }

#include "ndga/expr_matrix.hpp"
#include "ndga/graded_forms.hpp"
#include "ndga/n_complex.hpp"

#include <optional>
#include <string>
#include <string_view>

namespace ndga {

struct MetricInput {
  ExprMatrix g;
  std::optional<ExprMatrix> inverse;
};

Connection parse_connection(std::string_view text);
MetricInput parse_metric(std::string_view text);
FiniteNComplex parse_complex(std::string_view text);

/// Whole file contents; throws Error when unreadable.
std::string read_text_file(const std::string& path);

} // namespace ndga
