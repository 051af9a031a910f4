#include "ndga/graded_forms.hpp"

#include "ndga/error.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ndga {

MultiIndex::MultiIndex(const std::vector<int>& indices) {
  int previous = 0;
  for (int i : indices) {
    if (i <= previous || i > 31) throw DomainError("multi-index must be strictly increasing within 1..31");
    mask_ |= 1u << (i - 1);
    previous = i;
  }
}

int MultiIndex::degree() const { return std::popcount(mask_); }

std::vector<int> MultiIndex::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= 32; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

std::string MultiIndex::str() const {
  if (mask_ == 0) return "1";
  std::string out;
  for (int i : indices()) out += (out.empty() ? "dx" : "^dx") + std::to_string(i);
  return out;
}

bool operator<(MultiIndex a, MultiIndex b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.indices() < b.indices();
}

int wedge_sign(MultiIndex a, MultiIndex b) {
  if (a.mask() & b.mask()) return 0;
  int swaps = 0;
  for (int j : b.indices()) swaps += std::popcount(a.mask() >> j);
  return swaps % 2 ? -1 : 1;
}

EndValuedForm::EndValuedForm(int base_dim, std::size_t rows, std::size_t cols)
    : base_dim_(base_dim), rows_(rows), cols_(cols) {
  if (base_dim < 0 || base_dim > 31) throw DomainError("base dimension must lie in 0..31");
}

EndValuedForm EndValuedForm::identity(int base_dim, std::size_t fiber) {
  return monomial(base_dim, MultiIndex{}, ExprMatrix::identity(fiber));
}

EndValuedForm EndValuedForm::monomial(int base_dim, const MultiIndex& index, ExprMatrix value) {
  EndValuedForm f(base_dim, value.rows(), value.cols());
  f.add(index, value);
  return f;
}

EndValuedForm EndValuedForm::coordinate_differential(int base_dim, std::size_t fiber, int index) {
  if (index < 1 || index > base_dim) throw DomainError("coordinate index out of range");
  return monomial(base_dim, MultiIndex({index}), ExprMatrix::identity(fiber));
}

ExprMatrix EndValuedForm::component(const MultiIndex& index) const {
  auto it = components_.find(index);
  return it == components_.end() ? ExprMatrix(rows_, cols_) : it->second;
}

void EndValuedForm::add(const MultiIndex& index, const ExprMatrix& value) {
  if (value.rows() != rows_ || value.cols() != cols_) throw DimensionError("component shape mismatch");
  if (base_dim_ < 31 && (index.mask() >> base_dim_) != 0) throw DimensionError("multi-index exceeds base dimension");
  auto [it, inserted] = components_.try_emplace(index, value);
  if (!inserted) it->second += value;
  if (it->second.is_structurally_zero()) components_.erase(it);
}

EndValuedForm EndValuedForm::homogeneous_part(int degree) const {
  EndValuedForm out(base_dim_, rows_, cols_);
  for (const auto& [index, value] : components_)
    if (index.degree() == degree) out.components_.emplace(index, value);
  return out;
}

std::optional<int> EndValuedForm::degree() const {
  if (components_.empty()) return std::nullopt;
  const int d = components_.begin()->first.degree();
  for (const auto& [index, value] : components_)
    if (index.degree() != d) return std::nullopt;
  return d;
}

bool EndValuedForm::is_zero(const ZeroTest& test) const {
  for (const auto& [index, value] : components_)
    if (!value.is_zero(test)) return false;
  return true;
}

std::string EndValuedForm::str() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [index, value] : components_) {
    if (!out.empty()) out += " + ";
    out += value.str() + " " + index.str();
  }
  return out;
}

EndValuedForm EndValuedForm::operator-() const {
  EndValuedForm out = *this;
  for (auto& [index, value] : out.components_) value = -value;
  return out;
}

void EndValuedForm::check_compatible(const EndValuedForm& rhs) const {
  if (base_dim_ != rhs.base_dim_ || rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionError("forms differ in base dimension or fiber shape");
}

EndValuedForm& EndValuedForm::operator+=(const EndValuedForm& rhs) {
  check_compatible(rhs);
  for (const auto& [index, value] : rhs.components_) add(index, value);
  return *this;
}

EndValuedForm& EndValuedForm::operator-=(const EndValuedForm& rhs) {
  check_compatible(rhs);
  for (const auto& [index, value] : rhs.components_) add(index, -value);
  return *this;
}

EndValuedForm& EndValuedForm::operator*=(const ScalarExpr& s) {
  Components scaled;
  for (auto& [index, value] : components_) {
    ExprMatrix v = value * s;
    if (!v.is_structurally_zero()) scaled.emplace(index, std::move(v));
  }
  components_ = std::move(scaled);
  return *this;
}

bool operator==(const EndValuedForm& a, const EndValuedForm& b) {
  return a.base_dim_ == b.base_dim_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.components_ == b.components_;
}

EndValuedForm wedge(const EndValuedForm& a, const EndValuedForm& b) {
  if (a.base_dim() != b.base_dim()) throw DimensionError("wedge of forms on different base dimensions");
  if (a.cols() != b.rows()) throw DimensionError("wedge of forms with incompatible fiber shapes");
  EndValuedForm out(a.base_dim(), a.rows(), b.cols());
  for (const auto& [ia, va] : a.components())
    for (const auto& [ib, vb] : b.components()) {
      const int s = wedge_sign(ia, ib);
      if (s == 0) continue;
      ExprMatrix prod = va * vb;
      out.add(MultiIndex::from_mask(ia.mask() | ib.mask()), s > 0 ? prod : -prod);
    }
  return out;
}

EndValuedForm exterior_d(const EndValuedForm& a) {
  EndValuedForm out(a.base_dim(), a.rows(), a.cols());
  for (const auto& [index, value] : a.components())
    for (int j = 1; j <= a.base_dim(); ++j) {
      if (index.contains(j)) continue;
      ExprMatrix dv = value.map(&ndga::diff, j);
      if (dv.is_structurally_zero()) continue;
      const int s = wedge_sign(MultiIndex({j}), index);
      out.add(MultiIndex::from_mask(index.mask() | (1u << (j - 1))), s > 0 ? dv : -dv);
    }
  return out;
}

EndValuedForm wedge_power(const EndValuedForm& a, int k) {
  if (k < 0) throw DomainError("negative wedge power");
  if (a.rows() != a.cols()) throw DimensionError("wedge power of a non-square form");
  EndValuedForm out = EndValuedForm::identity(a.base_dim(), a.rows());
  for (int i = 0; i < k; ++i) out = wedge(out, a);
  return out;
}

Connection::Connection(EndValuedForm form) : form_(std::move(form)) {
  if (form_.rows() != form_.cols()) throw DimensionError("connection values must be square matrices");
  for (const auto& [index, value] : form_.components())
    if (index.degree() != 1) throw DomainError("connection form must have pure degree 1");
}

Connection Connection::from_blocks(int base_dim, const std::vector<ExprMatrix>& blocks) {
  if (static_cast<int>(blocks.size()) > base_dim) throw DimensionError("more connection blocks than coordinates");
  const std::size_t m = blocks.empty() ? 0 : blocks.front().rows();
  EndValuedForm form(base_dim, m, m);
  for (std::size_t i = 0; i < blocks.size(); ++i) form.add(MultiIndex({static_cast<int>(i) + 1}), blocks[i]);
  return Connection(std::move(form));
}

Connection Connection::zero(int base_dim, std::size_t fiber) { return Connection(EndValuedForm(base_dim, fiber, fiber)); }

ExprMatrix Connection::block(int index) const { return form_.component(MultiIndex({index})); }

EndValuedForm curvature(const Connection& w) { return exterior_d(w.form()) + wedge(w.form(), w.form()); }

EndValuedForm nabla_apply(const Connection& w, const EndValuedForm& alpha) {
  if (alpha.rows() != w.fiber_dim() || alpha.base_dim() != w.base_dim())
    throw DimensionError("form does not take values in the connection's bundle");
  return exterior_d(alpha) + wedge(w.form(), alpha);
}

bool is_n_flat(const Connection& w, int N, const ZeroTest& test) {
  if (N < 2) throw DomainError("flatness order must be at least 2");
  const EndValuedForm Fk = wedge_power(curvature(w), N / 2);
  if (N % 2 == 0) return Fk.is_zero(test);
  for (int i = 1; i <= w.base_dim(); ++i) {
    if (!wedge(Fk, EndValuedForm::coordinate_differential(w.base_dim(), w.fiber_dim(), i)).is_zero(test)) return false;
  }
  return wedge(Fk, w.form()).is_zero(test);
}

std::optional<int> minimal_flatness(const Connection& w, int max_N, const ZeroTest& test) {
  const EndValuedForm F = curvature(w);
  EndValuedForm Fk = EndValuedForm::identity(w.base_dim(), w.fiber_dim());
  for (int N = 2; N <= max_N; ++N) {
    if (N % 2 == 0) {
      Fk = wedge(Fk, F);
      if (Fk.is_zero(test)) return N;
    } else {
      bool ok = wedge(Fk, w.form()).is_zero(test);
      for (int i = 1; ok && i <= w.base_dim(); ++i)
        ok = wedge(Fk, EndValuedForm::coordinate_differential(w.base_dim(), w.fiber_dim(), i)).is_zero(test);
      if (ok) return N;
    }
  }
  return std::nullopt;
}

namespace {

int permutation_sign(const std::vector<int>& sorted, const std::vector<int>& image) {
  int inversions = 0;
  std::vector<std::size_t> pos(image.size());
  for (std::size_t k = 0; k < image.size(); ++k)
    pos[k] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), image[k]) - sorted.begin());
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j)
      if (pos[i] > pos[j]) ++inversions;
  return inversions % 2 ? -1 : 1;
}

void pairings_rec(std::vector<int>& remaining, std::vector<std::pair<int, int>>& current,
                  std::vector<std::vector<std::pair<int, int>>>& out) {
  if (remaining.empty()) {
    out.push_back(current);
    return;
  }
  const int a = remaining.front();
  for (std::size_t k = 1; k < remaining.size(); ++k) {
    const int b = remaining[k];
    std::vector<int> rest;
    for (std::size_t r = 1; r < remaining.size(); ++r)
      if (r != k) rest.push_back(remaining[r]);
    current.emplace_back(a, b);
    pairings_rec(rest, current, out);
    current.pop_back();
  }
}

} // namespace

std::vector<OrderedPairing> ordered_pairings(std::vector<int> set) {
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end()) throw DomainError("pairing set has repeated entries");
  if (set.size() % 2) throw DomainError("pairing set must have even size");
  std::vector<std::vector<std::pair<int, int>>> raw;
  std::vector<std::pair<int, int>> current;
  std::vector<int> work = set;
  pairings_rec(work, current, raw);
  std::vector<OrderedPairing> out;
  out.reserve(raw.size());
  for (auto& pairs : raw) {
    std::vector<int> image;
    for (const auto& [a, b] : pairs) {
      image.push_back(a);
      image.push_back(b);
    }
    out.push_back({std::move(pairs), permutation_sign(set, image)});
  }
  return out;
}

CurvatureComponents CurvatureComponents::from_two_form(const EndValuedForm& F) {
  CurvatureComponents c(F.base_dim(), F.rows());
  for (const auto& [index, value] : F.components()) {
    if (index.degree() != 2) throw DomainError("curvature components require a pure 2-form");
    const auto ij = index.indices();
    c.set(ij[0], ij[1], value);
  }
  return c;
}

void CurvatureComponents::set(int i, int j, ExprMatrix value) {
  if (i == j) throw DomainError("diagonal curvature component is zero by definition");
  if (i > j) {
    std::swap(i, j);
    value = -value;
  }
  values_[{i, j}] = std::move(value);
}

ExprMatrix CurvatureComponents::operator()(int i, int j) const {
  if (i == j) return ExprMatrix(fiber_, fiber_);
  const bool flip = i > j;
  auto it = values_.find(flip ? std::pair{j, i} : std::pair{i, j});
  if (it == values_.end()) return ExprMatrix(fiber_, fiber_);
  return flip ? -it->second : it->second;
}

ExprMatrix pairing_sum(const CurvatureComponents& F, const std::vector<int>& set) {
  ExprMatrix total(F.fiber_dim(), F.fiber_dim());
  for (const auto& p : ordered_pairings(set)) {
    std::vector<std::size_t> order(p.pairs.size());
    std::iota(order.begin(), order.end(), 0);
    do {
      ExprMatrix prod = ExprMatrix::identity(F.fiber_dim());
      for (std::size_t k : order) {
        prod = prod * F(p.pairs[k].first, p.pairs[k].second);
        if (prod.is_structurally_zero()) break;
      }
      if (p.sign > 0) {
        total += prod;
      } else {
        total -= prod;
      }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return total;
}

PairingCertificate pairing_flatness_certificate(const Connection& w, int k, const ZeroTest& test) {
  if (k < 1) throw DomainError("pairing certificate needs k >= 1");
  const CurvatureComponents F = CurvatureComponents::from_two_form(curvature(w));
  PairingCertificate cert;
  const int n = w.base_dim();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != 2 * k) continue;
    const auto set = MultiIndex::from_mask(mask).indices();
    if (!pairing_sum(F, set).is_zero(test)) {
      cert.holds = false;
      cert.failing_sets.push_back(set);
    }
  }
  return cert;
}

Connection tensor_connection(const Connection& w1, const Connection& w2) {
  if (w1.base_dim() != w2.base_dim()) throw DimensionError("tensor connection needs equal base dimensions");
  const ExprMatrix I1 = ExprMatrix::identity(w1.fiber_dim());
  const ExprMatrix I2 = ExprMatrix::identity(w2.fiber_dim());
  std::vector<ExprMatrix> blocks;
  for (int i = 1; i <= w1.base_dim(); ++i) blocks.push_back(kron(w1.block(i), I2) + kron(I1, w2.block(i)));
  if (blocks.empty()) return Connection::zero(0, w1.fiber_dim() * w2.fiber_dim());
  return Connection::from_blocks(w1.base_dim(), blocks);
}

} // namespace ndga
