#pragma once

// Depth-N differential forms: polynomial-coefficient combinations of
// generators d^i x_s (degree i, 1 <= i <= N_s - 1), graded commutative,
// with d^i x_s d^j x_s = 0.

#include "ndga/rational_matrix.hpp"
#include "ndga/scalar_expr.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace ndga {

/// (N_1, ..., N_k), every N_i >= 2.
using DepthProfile = std::vector<int>;

void validate_profile(const DepthProfile& profile);

/// I(s) for s = 1..k stored at position s-1; 0 means s is not in D(I).
/// Ordered by D(I) (as a sorted list of variables), then by depths.
struct DepthIndex {
  std::vector<int> depth;

  int degree() const;
  std::vector<int> support() const;
  /// "d2x1*dx2", "1" for the empty monomial.
  std::string str() const;

  friend bool operator==(const DepthIndex& a, const DepthIndex& b) { return a.depth == b.depth; }
  friend bool operator<(const DepthIndex& a, const DepthIndex& b);
};

/// Parses "d2x1*dx2", "dx1", "1" against a profile.
DepthIndex parse_depth_index(const DepthProfile& profile, std::string_view text);

class DepthForm {
public:
  using Components = std::map<DepthIndex, ScalarExpr>;

  explicit DepthForm(DepthProfile profile);
  static DepthForm function(DepthProfile profile, const ScalarExpr& f);
  static DepthForm monomial(DepthProfile profile, const DepthIndex& index, const ScalarExpr& coefficient = 1);
  /// d^depth x_variable.
  static DepthForm generator(DepthProfile profile, int variable, int depth);

  const DepthProfile& profile() const { return profile_; }
  int variables() const { return static_cast<int>(profile_.size()); }
  const Components& components() const { return components_; }
  ScalarExpr coefficient(const DepthIndex& index) const;

  void add(const DepthIndex& index, const ScalarExpr& coefficient);
  bool is_structurally_zero() const { return components_.empty(); }
  bool is_zero(const ZeroTest& test = {}) const;
  std::string str() const;

  DepthForm operator-() const;
  DepthForm& operator+=(const DepthForm& rhs);
  DepthForm& operator-=(const DepthForm& rhs);
  friend DepthForm operator+(DepthForm a, const DepthForm& b) { return a += b; }
  friend DepthForm operator-(DepthForm a, const DepthForm& b) { return a -= b; }
  friend DepthForm operator*(const ScalarExpr& s, const DepthForm& a);
  friend bool operator==(const DepthForm& a, const DepthForm& b) {
    return a.profile_ == b.profile_ && a.components_ == b.components_;
  }

private:
  void check_index(const DepthIndex& index) const;

  DepthProfile profile_;
  Components components_;
};

/// Sign of dx^I dx^J relative to dx^{I+J}: product over i in D(I), j in
/// D(J), i > j of (-1)^{I(i) J(j)}; 0 when D(I) and D(J) meet.
int depth_product_sign(const DepthIndex& a, const DepthIndex& b);

DepthForm multiply(const DepthForm& a, const DepthForm& b);

/// d(a_I dx^I) = sum_s (d_s a_I) dx_s dx^I + sum_{s in D(I)} (-1)^{sum_{t<s} I(t)} a_I dx^{I + e_s},
/// the second sum dropping raises past depth N_s - 1.
DepthForm differential(const DepthForm& a);
DepthForm d_power(const DepthForm& a, int m);

/// x^e dx^I with every e_s <= 2 and every admissible I.
std::vector<DepthForm> nilpotency_probes(const DepthProfile& profile);

/// Least M >= 1 with d^M = 0 on every probe. Throws DomainError when
/// sum N_i > 12.
int minimal_nilpotency(const DepthProfile& profile);

/// x -> A x + b with A invertible.
class AffineMap {
public:
  AffineMap(RationalMatrix A, std::vector<Rational> b);
  static AffineMap identity(std::size_t k);

  const RationalMatrix& linear() const { return A_; }
  const std::vector<Rational>& offset() const { return b_; }
  std::size_t dimension() const { return b_.size(); }

private:
  RationalMatrix A_;
  std::vector<Rational> b_;
};

/// (g o f)(x) = g(f(x)).
AffineMap compose(const AffineMap& g, const AffineMap& f);

/// f*(a)(x) = a(f(x)) on coefficients and f*(d^m x_i) = sum_j A_ij d^m x_j.
/// Requires a uniform profile (N, ..., N).
DepthForm affine_pullback(const AffineMap& f, const DepthForm& a);

bool chart_compatible(const DepthForm& alpha_u, const DepthForm& alpha_v, const AffineMap& transition,
                      const ZeroTest& test = {});

} // namespace ndga
