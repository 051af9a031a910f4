#include "ndga/n_complex.hpp"

#include "ndga/error.hpp"

#include <numeric>

namespace ndga {

FiniteNComplex::FiniteNComplex(int order, int lo, std::vector<std::size_t> dims, std::vector<RationalMatrix> differential)
    : order_(order), lo_(lo), dims_(std::move(dims)), d_(std::move(differential)) {
  if (order_ < 2) throw DomainError("N-complex order must be >= 2");
  if (dims_.empty()) throw DomainError("N-complex has no degrees");
  if (d_.size() > dims_.size() - 1) throw DimensionError("more differentials than degree pairs");
  d_.resize(dims_.size() - 1);
  for (std::size_t j = 0; j + 1 < dims_.size(); ++j) {
    auto& m = d_[j];
    if (m.rows() == 0 && m.cols() == 0 && (dims_[j] != 0 || dims_[j + 1] != 0)) m = RationalMatrix(dims_[j + 1], dims_[j]);
    if (m.rows() != dims_[j + 1] || m.cols() != dims_[j])
      throw DimensionError("d in degree " + std::to_string(lo_ + static_cast<int>(j)) + " is " + std::to_string(m.rows()) +
                           "x" + std::to_string(m.cols()) + ", expected " + std::to_string(dims_[j + 1]) + "x" +
                           std::to_string(dims_[j]));
  }
}

std::size_t FiniteNComplex::dim(int degree) const {
  if (degree < lo_ || degree > hi()) return 0;
  return dims_[static_cast<std::size_t>(degree - lo_)];
}

RationalMatrix FiniteNComplex::d(int degree) const {
  if (degree < lo_ || degree >= hi()) return RationalMatrix(dim(degree + 1), dim(degree));
  return d_[static_cast<std::size_t>(degree - lo_)];
}

RationalMatrix FiniteNComplex::d_power(int degree, int p) const {
  RationalMatrix out = RationalMatrix::identity(dim(degree));
  for (int s = 0; s < p; ++s) out = d(degree + s) * out;
  return out;
}

FiniteNComplex FiniteNComplex::with_order(int order) const { return FiniteNComplex(order, lo_, dims_, d_); }

bool validate(const FiniteNComplex& c) {
  for (int i = c.lo(); i <= c.hi(); ++i)
    if (!c.d_power(i, c.order()).is_zero()) return false;
  return true;
}

int minimal_order(const FiniteNComplex& c) {
  const int span = c.hi() - c.lo() + 1;
  for (int m = 1; m <= span; ++m) {
    bool zero = true;
    for (int i = c.lo(); i <= c.hi() && zero; ++i) zero = c.d_power(i, m).is_zero();
    if (zero) return m;
  }
  return span + 1;
}

std::size_t p_cohomology_dim(const FiniteNComplex& c, int p, int i) {
  const int N = c.order();
  if (p < 1 || p > N - 1) throw DomainError("p must lie in 1..N-1");
  if (i < c.lo() || i > c.hi()) throw DomainError("degree " + std::to_string(i) + " outside the complex");
  const RationalMatrix out = c.d_power(i, p);
  const RationalMatrix in = c.d_power(i - N + p, N - p);
  if (!(out * in).is_zero())
    throw ValidationError("image of d^" + std::to_string(N - p) + " is not inside the kernel of d^" + std::to_string(p) +
                          " at degree " + std::to_string(i));
  return out.kernel_dim() - in.rank();
}

TotalCohomology total_cohomology_dims(const FiniteNComplex& c, int m) {
  TotalCohomology r{m, 0, {}};
  for (int i = c.lo(); i <= c.hi(); ++i)
    for (int p = 1; p <= c.order() - 1; ++p)
      if (2 * i - p == m) {
        const std::size_t h = p_cohomology_dim(c, p, i);
        r.terms.push_back({i, p, h});
        r.total += h;
      }
  return r;
}

FiniteNComplex tensor_product(const FiniteNComplex& a, const FiniteNComplex& b) {
  std::size_t total = 0;
  for (int i = a.lo(); i <= a.hi(); ++i) total += a.dim(i);
  std::size_t total_b = 0;
  for (int j = b.lo(); j <= b.hi(); ++j) total_b += b.dim(j);
  if (total * total_b > 400) throw DomainError("tensor product exceeds the size budget");

  const int lo = a.lo() + b.lo(), hi = a.hi() + b.hi();
  // offset of the block A^i (x) B^{n-i} inside degree n
  auto offset = [&](int n, int i) {
    std::size_t o = 0;
    for (int s = a.lo(); s < i; ++s) o += a.dim(s) * b.dim(n - s);
    return o;
  };
  auto total_dim = [&](int n) { return offset(n, a.hi() + 1); };

  std::vector<std::size_t> dims;
  std::vector<RationalMatrix> d;
  for (int n = lo; n <= hi; ++n) dims.push_back(total_dim(n));
  for (int n = lo; n < hi; ++n) {
    RationalMatrix m(total_dim(n + 1), total_dim(n));
    for (int i = a.lo(); i <= a.hi(); ++i) {
      const int j = n - i;
      if (a.dim(i) == 0 || b.dim(j) == 0) continue;
      const std::size_t col = offset(n, i);
      // d1 (x) 1 into A^{i+1} (x) B^j
      const auto left = kron(a.d(i), RationalMatrix::identity(b.dim(j)));
      const std::size_t row_l = offset(n + 1, i + 1);
      for (std::size_t r = 0; r < left.rows(); ++r)
        for (std::size_t s = 0; s < left.cols(); ++s) m(row_l + r, col + s) += left(r, s);
      // (-1)^i 1 (x) d2 into A^i (x) B^{j+1}
      const auto right = kron(RationalMatrix::identity(a.dim(i)), b.d(j));
      const std::size_t row_r = offset(n + 1, i);
      const int sign = i % 2 ? -1 : 1;
      for (std::size_t r = 0; r < right.rows(); ++r)
        for (std::size_t s = 0; s < right.cols(); ++s) m(row_r + r, col + s) += sign * right(r, s);
    }
    d.push_back(std::move(m));
  }
  return FiniteNComplex(a.order() + b.order() - 1, lo, std::move(dims), std::move(d));
}

int tensor_nilpotency(const FiniteNComplex& a, const FiniteNComplex& b) { return minimal_order(tensor_product(a, b)); }

} // namespace ndga
