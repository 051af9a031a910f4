#pragma once

#include "ndga/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ndga {

/// Dense matrix over exact rationals, row-major.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  std::size_t rank() const;
  std::size_t kernel_dim() const { return cols_ - rank(); }
  Rational determinant() const;
  /// Throws DomainError when singular or non-square.
  RationalMatrix inverse() const;
  /// Reduced row echelon form; returns pivot columns.
  std::vector<std::size_t> row_reduce();

  std::string str() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Kronecker product a (x) b.
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

} // namespace ndga
