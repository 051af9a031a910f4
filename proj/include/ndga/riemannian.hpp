#pragma once

// Levi-Civita connection and Riemann curvature of a metric given in
// coordinates.

#include "ndga/graded_forms.hpp"

#include <optional>
#include <vector>

namespace ndga {

/// Symmetric n x n metric g_ij together with its inverse g^ij.
///
/// When no inverse is supplied it is derived for two shapes only: constant
/// rational metrics (exact elimination) and diagonal metrics whose entries
/// are single terms (entrywise reciprocal). Anything else needs an explicit
/// inverse. Construction checks symmetry and g * g^-1 = 1.
class Metric {
public:
  explicit Metric(ExprMatrix g, std::optional<ExprMatrix> inverse = std::nullopt, const ZeroTest& test = {});

  static Metric euclidean(int n);
  static Metric diagonal(const std::vector<ScalarExpr>& entries);

  int dimension() const { return static_cast<int>(g_.rows()); }
  const ExprMatrix& g() const { return g_; }
  const ExprMatrix& inverse() const { return inverse_; }

private:
  ExprMatrix g_;
  ExprMatrix inverse_;
};

/// Gamma^i_jk, 1-based, symmetric in j and k.
class ChristoffelSymbols {
public:
  explicit ChristoffelSymbols(int n) : n_(n), data_(static_cast<std::size_t>(n * n * n)) {}

  int dimension() const { return n_; }
  const ScalarExpr& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }
  ScalarExpr& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }

private:
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>(((i - 1) * n_ + (j - 1)) * n_ + (k - 1));
  }
  int n_;
  std::vector<ScalarExpr> data_;
};

/// Gamma^i_jk = 1/2 sum_l g^il (d_k g_lj + d_j g_lk - d_l g_jk).
ChristoffelSymbols christoffel(const Metric& g);

/// R^i_jkl = d_k Gamma^i_lj - d_l Gamma^i_kj + Gamma^i_kh Gamma^h_lj - Gamma^i_lh Gamma^h_kj.
ScalarExpr riemann_component(const ChristoffelSymbols& gamma, int i, int j, int k, int l);

/// w = sum_k w_k dx^k with (w_k)_ij = Gamma^i_kj.
Connection levi_civita_connection(const Metric& g);

/// sum_{k<l} (R^i_jkl)_ij dx^k ^ dx^l. Equal to curvature(levi_civita_connection(g)).
EndValuedForm riemann_form(const Metric& g);

bool levi_civita_n_flat(const Metric& g, int N, const ZeroTest& test = {});

} // namespace ndga
