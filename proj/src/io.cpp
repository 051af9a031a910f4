#include "ndga/io.hpp"

#include "ndga/error.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace ndga {

namespace {

struct Line {
  int number;
  std::string text;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto t = trim(raw);
    if (!t.empty()) out.push_back({number, std::move(t)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& what) {
  throw ParseError("line " + std::to_string(line.number) + ": " + what, 0, line.number);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(trim(item));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

long keyword_value(const Line& line, const std::string& keyword) {
  const auto w = words(line.text);
  if (w.size() != 2 || w[0] != keyword) fail(line, "expected '" + keyword + " <integer>'");
  try {
    std::size_t used = 0;
    const long v = std::stol(w[1], &used);
    if (used != w[1].size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    fail(line, "expected an integer after '" + keyword + "'");
  }
}

ScalarExpr parse_entry(const Line& line, const std::string& text) {
  if (text.empty()) fail(line, "empty matrix entry");
  try {
    return parse(text);
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

ExprMatrix parse_rows(const std::vector<Line>& lines, std::size_t& at, std::size_t n, const std::string& what) {
  ExprMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (at >= lines.size()) {
      if (lines.empty()) throw ParseError("missing rows of " + what, 0, 0);
      fail(lines.back(), "expected " + std::to_string(n) + " rows of " + what);
    }
    const Line& line = lines[at++];
    const auto entries = split(line.text, ';');
    if (entries.size() != n)
      fail(line, "row of " + what + " has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(n));
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_entry(line, entries[c]);
  }
  return m;
}

} // namespace

Connection parse_connection(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.size() < 2) throw ParseError("connection file needs 'base' and 'fiber' lines", 0, lines.empty() ? 0 : lines[0].number);
  const long n = keyword_value(lines[0], "base");
  const long m = keyword_value(lines[1], "fiber");
  if (n < 1) fail(lines[0], "base dimension must be positive");
  if (m < 1) fail(lines[1], "fiber dimension must be positive");
  std::vector<ExprMatrix> blocks(static_cast<std::size_t>(n), ExprMatrix(static_cast<std::size_t>(m), static_cast<std::size_t>(m)));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::size_t at = 2;
  while (at < lines.size()) {
    const Line& header = lines[at++];
    const long i = keyword_value(header, "omega");
    if (i < 1 || i > n) fail(header, "omega index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(i - 1)]) fail(header, "omega " + std::to_string(i) + " given twice");
    seen[static_cast<std::size_t>(i - 1)] = true;
    blocks[static_cast<std::size_t>(i - 1)] = parse_rows(lines, at, static_cast<std::size_t>(m), "omega " + std::to_string(i));
  }
  return Connection::from_blocks(static_cast<int>(n), blocks);
}

MetricInput parse_metric(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("metric file is empty", 0, 0);
  const long n = keyword_value(lines[0], "dim");
  if (n < 1) fail(lines[0], "dimension must be positive");
  std::size_t at = 1;
  MetricInput out{parse_rows(lines, at, static_cast<std::size_t>(n), "the metric"), std::nullopt};
  if (at < lines.size()) {
    if (lines[at].text != "inverse") fail(lines[at], "expected 'inverse' or end of file");
    ++at;
    out.inverse = parse_rows(lines, at, static_cast<std::size_t>(n), "the inverse metric");
  }
  if (at < lines.size()) fail(lines[at], "unexpected content after the metric");
  return out;
}

FiniteNComplex parse_complex(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("complex file is empty", 0, 0);
  const long order = keyword_value(lines[0], "N");
  if (order < 2) fail(lines[0], "order must be >= 2");

  struct Block {
    Line header;
    int degree;
    std::size_t dim;
    std::vector<Line> rows;
  };
  std::vector<Block> blocks;
  for (std::size_t at = 1; at < lines.size(); ++at) {
    const Line& line = lines[at];
    const auto w = words(line.text);
    if (!w.empty() && w[0] == "deg") {
      if (w.size() != 4 || w[2] != "dim") fail(line, "expected 'deg <i> dim <n>'");
      long deg = 0, dim = 0;
      try {
        deg = std::stol(w[1]);
        dim = std::stol(w[3]);
      } catch (const std::exception&) {
        fail(line, "expected integers in 'deg <i> dim <n>'");
      }
      if (dim < 0) fail(line, "dimension must be non-negative");
      if (!blocks.empty() && deg != blocks.back().degree + 1) fail(line, "degrees must be consecutive");
      blocks.push_back({line, static_cast<int>(deg), static_cast<std::size_t>(dim), {}});
    } else {
      if (blocks.empty()) fail(line, "matrix row before any 'deg' line");
      blocks.back().rows.push_back(line);
    }
  }
  if (blocks.empty()) fail(lines[0], "no degrees given");

  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> d;
  for (const auto& b : blocks) dims.push_back(b.dim);
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const auto& b = blocks[j];
    const std::size_t rows = j + 1 < blocks.size() ? blocks[j + 1].dim : 0;
    if (j + 1 == blocks.size()) {
      if (!b.rows.empty()) fail(b.rows.front(), "the top degree has no outgoing matrix");
      break;
    }
    RationalMatrix m(rows, b.dim);
    if (!b.rows.empty()) {
      if (b.rows.size() != rows)
        fail(b.header, "d in degree " + std::to_string(b.degree) + " needs " + std::to_string(rows) + " rows, got " +
                           std::to_string(b.rows.size()));
      for (std::size_t r = 0; r < rows; ++r) {
        const auto entries = words(b.rows[r].text);
        if (entries.size() != b.dim)
          fail(b.rows[r], "row has " + std::to_string(entries.size()) + " entries, expected " + std::to_string(b.dim));
        for (std::size_t c = 0; c < b.dim; ++c) {
          try {
            m(r, c) = parse_rational(entries[c]);
          } catch (const Error&) {
            fail(b.rows[r], "bad fraction '" + entries[c] + "'");
          }
        }
      }
    }
    d.push_back(std::move(m));
  }
  return FiniteNComplex(static_cast<int>(order), blocks.front().degree, dims, d);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

} // namespace ndga
