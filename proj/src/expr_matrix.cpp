#include "ndga/expr_matrix.hpp"

#include "ndga/error.hpp"

namespace ndga {

ExprMatrix ExprMatrix::identity(std::size_t n) {
  ExprMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ScalarExpr(1);
  return m;
}

ExprMatrix ExprMatrix::unit(std::size_t n, std::size_t i, std::size_t j) {
  ExprMatrix m(n, n);
  m(i, j) = ScalarExpr(1);
  return m;
}

ExprMatrix ExprMatrix::from_rational(const RationalMatrix& r) {
  ExprMatrix m(r.rows(), r.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) m(i, j) = ScalarExpr(r(i, j));
  return m;
}

bool ExprMatrix::is_structurally_zero() const {
  for (const auto& e : data_)
    if (!e.is_structurally_zero()) return false;
  return true;
}

bool ExprMatrix::is_zero(const ZeroTest& test) const {
  for (const auto& e : data_)
    if (!ndga::is_zero(e, test)) return false;
  return true;
}

ExprMatrix ExprMatrix::map(ScalarExpr (*f)(const ScalarExpr&, int), int arg) const {
  ExprMatrix out(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = f(data_[k], arg);
  return out;
}

std::string ExprMatrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? "; [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).str();
    out += "]";
  }
  return out + "]";
}

ExprMatrix ExprMatrix::operator-() const {
  ExprMatrix out = *this;
  for (auto& e : out.data_) e = -e;
  return out;
}

ExprMatrix& ExprMatrix::operator+=(const ExprMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

ExprMatrix& ExprMatrix::operator-=(const ExprMatrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

ExprMatrix& ExprMatrix::operator*=(const ScalarExpr& s) {
  for (auto& e : data_) e *= s;
  return *this;
}

ExprMatrix operator*(const ExprMatrix& a, const ExprMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  ExprMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ScalarExpr& aik = a(i, k);
      if (aik.is_structurally_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_structurally_zero()) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

bool operator==(const ExprMatrix& a, const ExprMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

ExprMatrix kron(const ExprMatrix& a, const ExprMatrix& b) {
  ExprMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_structurally_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return out;
}

} // namespace ndga
