#pragma once

// Finite N-complexes over Q and their generalized cohomology pH^i.

#include "ndga/rational_matrix.hpp"

#include <cstddef>
#include <vector>

namespace ndga {

/// Degrees lo..lo+dims.size()-1; differential[j] maps degree lo+j to lo+j+1
/// (the top degree maps to zero). Degrees outside the range are zero spaces.
class FiniteNComplex {
public:
  FiniteNComplex(int order, int lo, std::vector<std::size_t> dims, std::vector<RationalMatrix> differential);

  int order() const { return order_; }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  std::size_t dim(int degree) const;
  /// d: A^degree -> A^{degree+1}, a dim(degree+1) x dim(degree) matrix.
  RationalMatrix d(int degree) const;
  /// d^p: A^degree -> A^{degree+p}.
  RationalMatrix d_power(int degree, int p) const;

  /// Same maps with a different nilpotency order.
  FiniteNComplex with_order(int order) const;

private:
  int order_;
  int lo_;
  std::vector<std::size_t> dims_;
  std::vector<RationalMatrix> d_;
};

/// True iff every N-fold composition vanishes.
bool validate(const FiniteNComplex& c);

/// Least m >= 1 with every m-fold composition zero.
int minimal_order(const FiniteNComplex& c);

/// dim Ker(d^p at i) - rank(d^{N-p} into i). Throws ValidationError when the
/// image is not inside the kernel, DomainError when p or i is out of range.
std::size_t p_cohomology_dim(const FiniteNComplex& c, int p, int i);

struct CohomologyTerm {
  int degree;
  int p;
  std::size_t dim;
};

struct TotalCohomology {
  int m;
  std::size_t total = 0;
  std::vector<CohomologyTerm> terms; // every (i, p) with 2i - p = m, i in range
};

TotalCohomology total_cohomology_dims(const FiniteNComplex& c, int m);

/// Graded tensor product with d = d1 (x) 1 + (-1)^i 1 (x) d2 on A1^i (x) A2^j,
/// basis ordered by i then lexicographically. Order N1 + N2 - 1.
/// Throws DomainError when the total dimension exceeds 400.
FiniteNComplex tensor_product(const FiniteNComplex& a, const FiniteNComplex& b);

/// minimal_order(tensor_product(a, b)).
int tensor_nilpotency(const FiniteNComplex& a, const FiniteNComplex& b);

} // namespace ndga
