#include "ndga/riemannian.hpp"

#include "ndga/error.hpp"

namespace ndga {

namespace {

std::optional<ExprMatrix> derive_inverse(const ExprMatrix& g) {
  const std::size_t n = g.rows();
  RationalMatrix constant(n, n);
  bool is_constant = true;
  for (std::size_t i = 0; i < n && is_constant; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = g(i, j).constant_value();
      if (!c) {
        is_constant = false;
        break;
      }
      constant(i, j) = *c;
    }
  if (is_constant) return ExprMatrix::from_rational(constant.inverse());

  ExprMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (!g(i, j).is_structurally_zero()) return std::nullopt;
    }
  for (std::size_t i = 0; i < n; ++i) {
    if (g(i, i).term_count() != 1) return std::nullopt;
    inv(i, i) = g(i, i).pow(-1);
  }
  return inv;
}

} // namespace

Metric::Metric(ExprMatrix g, std::optional<ExprMatrix> inverse, const ZeroTest& test) : g_(std::move(g)) {
  if (g_.rows() == 0 || g_.rows() != g_.cols()) throw DimensionError("metric must be a nonempty square matrix");
  const std::size_t n = g_.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(g_(i, j) == g_(j, i)))
        throw ValidationError("metric is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
  if (inverse) {
    if (inverse->rows() != n || inverse->cols() != n) throw DimensionError("inverse metric has the wrong shape");
    inverse_ = std::move(*inverse);
  } else {
    auto derived = derive_inverse(g_);
    if (!derived) throw DomainError("inverse metric not expressible; supply it explicitly");
    inverse_ = std::move(*derived);
  }
  if (!(g_ * inverse_ - ExprMatrix::identity(n)).is_zero(test))
    throw ValidationError("g * inverse is not the identity");
}

Metric Metric::euclidean(int n) { return Metric(ExprMatrix::identity(static_cast<std::size_t>(n))); }

Metric Metric::diagonal(const std::vector<ScalarExpr>& entries) {
  ExprMatrix g(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) g(i, i) = entries[i];
  return Metric(g);
}

ChristoffelSymbols christoffel(const Metric& metric) {
  const int n = metric.dimension();
  const auto& g = metric.g();
  const auto& ginv = metric.inverse();
  auto G = [&](int a, int b) -> const ScalarExpr& { return g(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)); };

  // first kind: [jk, l] = 1/2 (d_k g_lj + d_j g_lk - d_l g_jk)
  std::vector<ScalarExpr> first(static_cast<std::size_t>(n * n * n));
  auto at = [n](int j, int k, int l) { return static_cast<std::size_t>(((j - 1) * n + (k - 1)) * n + (l - 1)); };
  const ScalarExpr half(Rational(1, 2));
  for (int j = 1; j <= n; ++j)
    for (int k = j; k <= n; ++k)
      for (int l = 1; l <= n; ++l) {
        ScalarExpr v = half * (G(l, j).diff(k) + G(l, k).diff(j) - G(j, k).diff(l));
        first[at(j, k, l)] = v;
        first[at(k, j, l)] = v;
      }

  ChristoffelSymbols gamma(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = j; k <= n; ++k) {
        ScalarExpr sum;
        for (int l = 1; l <= n; ++l) {
          const auto& gil = ginv(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(l - 1));
          if (gil.is_structurally_zero()) continue;
          sum += gil * first[at(j, k, l)];
        }
        gamma(i, j, k) = sum;
        gamma(i, k, j) = sum;
      }
  return gamma;
}

ScalarExpr riemann_component(const ChristoffelSymbols& gamma, int i, int j, int k, int l) {
  const int n = gamma.dimension();
  ScalarExpr r = gamma(i, l, j).diff(k) - gamma(i, k, j).diff(l);
  for (int h = 1; h <= n; ++h) r += gamma(i, k, h) * gamma(h, l, j) - gamma(i, l, h) * gamma(h, k, j);
  return r;
}

Connection levi_civita_connection(const Metric& g) {
  const int n = g.dimension();
  const auto gamma = christoffel(g);
  const auto m = static_cast<std::size_t>(n);
  std::vector<ExprMatrix> blocks;
  for (int k = 1; k <= n; ++k) {
    ExprMatrix b(m, m);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = gamma(i, k, j);
    blocks.push_back(std::move(b));
  }
  return Connection::from_blocks(n, blocks);
}

EndValuedForm riemann_form(const Metric& g) {
  const int n = g.dimension();
  const auto gamma = christoffel(g);
  const auto m = static_cast<std::size_t>(n);
  EndValuedForm R(n, m, m);
  for (int k = 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) {
      ExprMatrix block(m, m);
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          block(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = riemann_component(gamma, i, j, k, l);
      R.add(MultiIndex({k, l}), block);
    }
  return R;
}

bool levi_civita_n_flat(const Metric& g, int N, const ZeroTest& test) {
  return is_n_flat(levi_civita_connection(g), N, test);
}

} // namespace ndga
