#pragma once

#include "ndga/rational_matrix.hpp"
#include "ndga/scalar_expr.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ndga {

/// Dense rows x cols matrix of ScalarExpr entries.
class ExprMatrix {
public:
  ExprMatrix() = default;
  ExprMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ExprMatrix identity(std::size_t n);
  /// Matrix unit E_ij (0-based) of size n x n.
  static ExprMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static ExprMatrix from_rational(const RationalMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  ScalarExpr& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const ScalarExpr& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_structurally_zero() const;
  bool is_zero(const ZeroTest& test = {}) const;
  ExprMatrix map(ScalarExpr (*f)(const ScalarExpr&, int), int arg) const;

  std::string str() const;

  ExprMatrix operator-() const;
  ExprMatrix& operator+=(const ExprMatrix& rhs);
  ExprMatrix& operator-=(const ExprMatrix& rhs);
  ExprMatrix& operator*=(const ScalarExpr& s);

  friend ExprMatrix operator+(ExprMatrix a, const ExprMatrix& b) { return a += b; }
  friend ExprMatrix operator-(ExprMatrix a, const ExprMatrix& b) { return a -= b; }
  friend ExprMatrix operator*(ExprMatrix a, const ScalarExpr& s) { return a *= s; }
  friend ExprMatrix operator*(const ScalarExpr& s, ExprMatrix a) { return a *= s; }
  friend ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b);
  friend bool operator==(const ExprMatrix& a, const ExprMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ScalarExpr> data_;
};

ExprMatrix kron(const ExprMatrix& a, const ExprMatrix& b);

} // namespace ndga
