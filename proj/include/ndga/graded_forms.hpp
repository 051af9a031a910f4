#pragma once

// Matrix-valued differential forms on a coordinate patch of R^n, the
// covariant derivative d + w of a connection, its curvature, and the
// flatness criteria for powers of the covariant derivative.

#include "ndga/expr_matrix.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ndga {

/// Strictly increasing set of coordinate indices 1..31, i.e. the basis
/// monomial dx^{i1} ^ ... ^ dx^{ik}. Ordered by degree, then lexicographically.
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(const std::vector<int>& indices);
  static MultiIndex from_mask(std::uint32_t mask) {
    MultiIndex m;
    m.mask_ = mask;
    return m;
  }

  std::uint32_t mask() const { return mask_; }
  int degree() const;
  bool contains(int index) const { return (mask_ >> (index - 1)) & 1u; }
  std::vector<int> indices() const;
  /// "1", "dx1^dx3", ...
  std::string str() const;

  friend bool operator==(MultiIndex a, MultiIndex b) { return a.mask_ == b.mask_; }
  friend bool operator<(MultiIndex a, MultiIndex b);

private:
  std::uint32_t mask_ = 0;
};

/// Sign of dx^I ^ dx^J relative to dx^{I u J}; 0 when I and J intersect.
int wedge_sign(MultiIndex a, MultiIndex b);

/// Element of Omega(U, Hom(C^cols, C^rows)) over an n-dimensional patch:
/// a finite map from multi-indices to rows x cols matrices. Square forms are
/// End(E)-valued; rows x 1 forms are E-valued.
class EndValuedForm {
public:
  using Components = std::map<MultiIndex, ExprMatrix>;

  EndValuedForm(int base_dim, std::size_t rows, std::size_t cols);

  static EndValuedForm identity(int base_dim, std::size_t fiber);
  static EndValuedForm monomial(int base_dim, const MultiIndex& index, ExprMatrix value);
  /// dx_i tensored with the fiber identity.
  static EndValuedForm coordinate_differential(int base_dim, std::size_t fiber, int index);

  int base_dim() const { return base_dim_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Components& components() const { return components_; }
  ExprMatrix component(const MultiIndex& index) const;

  void add(const MultiIndex& index, const ExprMatrix& value);
  EndValuedForm homogeneous_part(int degree) const;
  /// Degree of a nonzero homogeneous form; nullopt when mixed or zero.
  std::optional<int> degree() const;

  bool is_structurally_zero() const { return components_.empty(); }
  bool is_zero(const ZeroTest& test = {}) const;

  std::string str() const;

  EndValuedForm operator-() const;
  EndValuedForm& operator+=(const EndValuedForm& rhs);
  EndValuedForm& operator-=(const EndValuedForm& rhs);
  EndValuedForm& operator*=(const ScalarExpr& s);
  friend EndValuedForm operator+(EndValuedForm a, const EndValuedForm& b) { return a += b; }
  friend EndValuedForm operator-(EndValuedForm a, const EndValuedForm& b) { return a -= b; }
  friend EndValuedForm operator*(const ScalarExpr& s, EndValuedForm a) { return a *= s; }
  friend bool operator==(const EndValuedForm& a, const EndValuedForm& b);

private:
  void check_compatible(const EndValuedForm& rhs) const;

  int base_dim_;
  std::size_t rows_;
  std::size_t cols_;
  Components components_;
};

/// Graded product: basis monomials wedge with the shuffle sign and matrix
/// values multiply in order.
EndValuedForm wedge(const EndValuedForm& a, const EndValuedForm& b);

/// d(f dx^I) = sum_j (df/dx_j) dx^j ^ dx^I, entrywise.
EndValuedForm exterior_d(const EndValuedForm& a);

/// k-fold wedge power, multiplied left to right; k = 0 gives the identity.
EndValuedForm wedge_power(const EndValuedForm& a, int k);

/// Connection one-form w = sum_i w_i dx^i with square m x m values.
class Connection {
public:
  explicit Connection(EndValuedForm form);
  /// `blocks[i-1]` is w_i; all blocks must be m x m.
  static Connection from_blocks(int base_dim, const std::vector<ExprMatrix>& blocks);
  static Connection zero(int base_dim, std::size_t fiber);

  const EndValuedForm& form() const { return form_; }
  int base_dim() const { return form_.base_dim(); }
  std::size_t fiber_dim() const { return form_.rows(); }
  /// w_i for 1 <= i <= n.
  ExprMatrix block(int index) const;

private:
  EndValuedForm form_;
};

/// F = dw + w ^ w.
EndValuedForm curvature(const Connection& w);

/// (d + w) alpha = d alpha + w ^ alpha for forms with `fiber_dim` rows.
EndValuedForm nabla_apply(const Connection& w, const EndValuedForm& alpha);

/// (d + w)^N = 0, decided from the curvature: for N = 2K, F^K = 0; for
/// N = 2K+1, F^K ^ dx_i = 0 for every i and F^K ^ w = 0.
bool is_n_flat(const Connection& w, int N, const ZeroTest& test = {});

/// Least N in [2, max_N] with is_n_flat, or nullopt.
std::optional<int> minimal_flatness(const Connection& w, int max_N, const ZeroTest& test = {});

/// Partition of a sorted 2k-element set into pairs (a, b) with a < b,
/// listed by increasing first element. `sign` is the sign of the
/// permutation taking the sorted set to (a1, b1, ..., ak, bk).
struct OrderedPairing {
  std::vector<std::pair<int, int>> pairs;
  int sign = 1;
};

/// All (2k-1)!! pairings of `set` (any order, distinct entries). Throws
/// DomainError on odd size or repeated entries.
std::vector<OrderedPairing> ordered_pairings(std::vector<int> set);

/// Curvature components F_ij for i < j with F_ji = -F_ij and F_ii = 0.
class CurvatureComponents {
public:
  CurvatureComponents(int base_dim, std::size_t fiber) : base_dim_(base_dim), fiber_(fiber) {}
  /// Reads F_ij as the coefficient of dx^i ^ dx^j of a 2-form.
  static CurvatureComponents from_two_form(const EndValuedForm& F);

  int base_dim() const { return base_dim_; }
  std::size_t fiber_dim() const { return fiber_; }
  void set(int i, int j, ExprMatrix value);
  ExprMatrix operator()(int i, int j) const;

private:
  int base_dim_;
  std::size_t fiber_;
  std::map<std::pair<int, int>, ExprMatrix> values_;
};

/// sum over pairings p of `set` of sign(p) times the sum, over every order
/// of the k blocks, of the ordered product F_{a b} ... F_{a' b'}. This is
/// exactly the coefficient of dx^{s1} ^ ... ^ dx^{s2k} in F^k.
ExprMatrix pairing_sum(const CurvatureComponents& F, const std::vector<int>& set);

struct PairingCertificate {
  bool holds = true;
  std::vector<std::vector<int>> failing_sets;
};

/// Checks pairing_sum(F, A) = 0 for every 2k-subset A of {1..n}. Equivalent
/// to is_n_flat(w, 2k).
PairingCertificate pairing_flatness_certificate(const Connection& w, int k, const ZeroTest& test = {});

/// w1 (x) 1 + 1 (x) w2 on the tensor product of the fibers.
Connection tensor_connection(const Connection& w1, const Connection& w2);

} // namespace ndga
