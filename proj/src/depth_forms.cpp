#include "ndga/depth_forms.hpp"

#include "ndga/error.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace ndga {

void validate_profile(const DepthProfile& profile) {
  if (profile.empty()) throw DomainError("depth profile is empty");
  for (int n : profile)
    if (n < 2) throw DomainError("depth profile entries must be >= 2");
}

int DepthIndex::degree() const { return std::accumulate(depth.begin(), depth.end(), 0); }

std::vector<int> DepthIndex::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < depth.size(); ++i)
    if (depth[i] > 0) out.push_back(static_cast<int>(i) + 1);
  return out;
}

std::string DepthIndex::str() const {
  std::string out;
  for (std::size_t i = 0; i < depth.size(); ++i) {
    if (depth[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'd';
    if (depth[i] > 1) out += std::to_string(depth[i]);
    out += 'x' + std::to_string(i + 1);
  }
  return out.empty() ? "1" : out;
}

bool operator<(const DepthIndex& a, const DepthIndex& b) {
  const auto sa = a.support(), sb = b.support();
  if (sa != sb) return sa < sb;
  return a.depth < b.depth;
}

DepthIndex parse_depth_index(const DepthProfile& profile, std::string_view text) {
  DepthIndex idx{std::vector<int>(profile.size(), 0)};
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto number = [&]() -> int {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a number at offset " + std::to_string(pos), pos);
    return std::stoi(std::string(text.substr(start, pos - start)));
  };
  skip();
  if (text.substr(pos) == "1") return idx;
  while (true) {
    skip();
    const std::size_t start = pos;
    if (pos >= text.size() || text[pos] != 'd') throw ParseError("expected 'd' at offset " + std::to_string(pos), pos);
    ++pos;
    int depth = 1;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) depth = number();
    if (pos >= text.size() || text[pos] != 'x') throw ParseError("expected 'x' at offset " + std::to_string(pos), pos);
    ++pos;
    const int var = number();
    if (var < 1 || var > static_cast<int>(profile.size()))
      throw ParseError("variable x" + std::to_string(var) + " outside the profile", start);
    if (depth < 1 || depth >= profile[static_cast<std::size_t>(var - 1)])
      throw ParseError("depth " + std::to_string(depth) + " not allowed for x" + std::to_string(var), start);
    auto& slot = idx.depth[static_cast<std::size_t>(var - 1)];
    if (slot != 0) throw ParseError("x" + std::to_string(var) + " appears twice", start);
    slot = depth;
    skip();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*' at offset " + std::to_string(pos), pos);
    ++pos;
  }
  return idx;
}

DepthForm::DepthForm(DepthProfile profile) : profile_(std::move(profile)) { validate_profile(profile_); }

DepthForm DepthForm::function(DepthProfile profile, const ScalarExpr& f) {
  const std::size_t k = profile.size();
  DepthForm a(std::move(profile));
  a.add(DepthIndex{std::vector<int>(k, 0)}, f);
  return a;
}

DepthForm DepthForm::monomial(DepthProfile profile, const DepthIndex& index, const ScalarExpr& coefficient) {
  DepthForm a(std::move(profile));
  a.add(index, coefficient);
  return a;
}

DepthForm DepthForm::generator(DepthProfile profile, int variable, int depth) {
  DepthIndex idx{std::vector<int>(profile.size(), 0)};
  if (variable < 1 || variable > static_cast<int>(profile.size())) throw DomainError("generator variable out of range");
  idx.depth[static_cast<std::size_t>(variable - 1)] = depth;
  return monomial(std::move(profile), idx);
}

ScalarExpr DepthForm::coefficient(const DepthIndex& index) const {
  auto it = components_.find(index);
  return it == components_.end() ? ScalarExpr() : it->second;
}

void DepthForm::check_index(const DepthIndex& index) const {
  if (index.depth.size() != profile_.size()) throw DimensionError("depth index has the wrong number of variables");
  for (std::size_t i = 0; i < profile_.size(); ++i)
    if (index.depth[i] < 0 || index.depth[i] >= profile_[i]) throw DomainError("depth exceeds the profile");
}

void DepthForm::add(const DepthIndex& index, const ScalarExpr& coefficient) {
  check_index(index);
  if (coefficient.is_structurally_zero()) return;
  auto [it, inserted] = components_.try_emplace(index, coefficient);
  if (!inserted) it->second += coefficient;
  if (it->second.is_structurally_zero()) components_.erase(it);
}

bool DepthForm::is_zero(const ZeroTest& test) const {
  return std::all_of(components_.begin(), components_.end(), [&](const auto& kv) { return ndga::is_zero(kv.second, test); });
}

std::string DepthForm::str() const {
  if (components_.empty()) return "0";
  std::string out;
  for (const auto& [idx, c] : components_) {
    if (!out.empty()) out += " + ";
    if (idx.degree() == 0)
      out += "(" + render(c) + ")";
    else if (c == ScalarExpr(1))
      out += idx.str();
    else
      out += "(" + render(c) + ")*" + idx.str();
  }
  return out;
}

DepthForm DepthForm::operator-() const {
  DepthForm r(profile_);
  for (const auto& [idx, c] : components_) r.components_.emplace(idx, -c);
  return r;
}

DepthForm& DepthForm::operator+=(const DepthForm& rhs) {
  if (rhs.profile_ != profile_) throw DimensionError("depth profiles differ");
  for (const auto& [idx, c] : rhs.components_) add(idx, c);
  return *this;
}

DepthForm& DepthForm::operator-=(const DepthForm& rhs) {
  if (rhs.profile_ != profile_) throw DimensionError("depth profiles differ");
  for (const auto& [idx, c] : rhs.components_) add(idx, -c);
  return *this;
}

DepthForm operator*(const ScalarExpr& s, const DepthForm& a) {
  DepthForm r(a.profile_);
  for (const auto& [idx, c] : a.components_) r.add(idx, s * c);
  return r;
}

int depth_product_sign(const DepthIndex& a, const DepthIndex& b) {
  int exponent = 0;
  for (std::size_t i = 0; i < a.depth.size(); ++i) {
    if (a.depth[i] == 0) continue;
    if (b.depth[i] != 0) return 0;
    for (std::size_t j = 0; j < i; ++j) exponent += a.depth[i] * b.depth[j];
  }
  return exponent % 2 ? -1 : 1;
}

namespace {

DepthIndex combine(const DepthIndex& a, const DepthIndex& b) {
  DepthIndex r = a;
  for (std::size_t i = 0; i < r.depth.size(); ++i) r.depth[i] += b.depth[i];
  return r;
}

} // namespace

DepthForm multiply(const DepthForm& a, const DepthForm& b) {
  if (a.profile() != b.profile()) throw DimensionError("depth profiles differ");
  DepthForm r(a.profile());
  for (const auto& [ia, ca] : a.components())
    for (const auto& [ib, cb] : b.components()) {
      const int sign = depth_product_sign(ia, ib);
      if (sign == 0) continue;
      const ScalarExpr c = ca * cb;
      r.add(combine(ia, ib), sign > 0 ? c : -c);
    }
  return r;
}

DepthForm differential(const DepthForm& a) {
  const auto& profile = a.profile();
  const int k = a.variables();
  DepthForm r(profile);
  for (const auto& [idx, c] : a.components()) {
    int before = 0; // sum of I(t) for t < s
    for (int s = 1; s <= k; ++s) {
      const int here = idx.depth[static_cast<std::size_t>(s - 1)];
      if (here == 0) {
        const ScalarExpr ds = c.diff(s);
        if (!ds.is_structurally_zero()) {
          DepthIndex next = idx;
          next.depth[static_cast<std::size_t>(s - 1)] = 1;
          r.add(next, before % 2 ? -ds : ds);
        }
      } else if (here + 1 < profile[static_cast<std::size_t>(s - 1)]) {
        DepthIndex next = idx;
        next.depth[static_cast<std::size_t>(s - 1)] = here + 1;
        r.add(next, before % 2 ? -c : c);
      }
      before += here;
    }
  }
  return r;
}

DepthForm d_power(const DepthForm& a, int m) {
  if (m < 1) throw DomainError("d_power needs m >= 1");
  DepthForm r = a;
  for (int i = 0; i < m && !r.is_structurally_zero(); ++i) r = differential(r);
  return r;
}

std::vector<DepthForm> nilpotency_probes(const DepthProfile& profile) {
  validate_profile(profile);
  const std::size_t k = profile.size();
  std::vector<DepthForm> out;
  std::vector<int> exps(k, 0);
  std::vector<int> depth(k, 0);
  auto for_depths = [&](const ScalarExpr& f) {
    std::fill(depth.begin(), depth.end(), 0);
    while (true) {
      out.push_back(DepthForm::monomial(profile, DepthIndex{depth}, f));
      std::size_t i = 0;
      while (i < k && ++depth[i] == profile[i]) depth[i++] = 0;
      if (i == k) break;
    }
  };
  while (true) {
    ScalarExpr f(1);
    for (std::size_t i = 0; i < k; ++i) f *= ScalarExpr::variable(static_cast<int>(i) + 1).pow(exps[i]);
    for_depths(f);
    std::size_t i = 0;
    while (i < k && ++exps[i] == 3) exps[i++] = 0;
    if (i == k) break;
  }
  return out;
}

int minimal_nilpotency(const DepthProfile& profile) {
  validate_profile(profile);
  const int total = std::accumulate(profile.begin(), profile.end(), 0);
  if (total > 12) throw DomainError("probe budget exceeded: sum of depths above 12");
  std::vector<DepthForm> current = nilpotency_probes(profile);
  // d has degree +1 and the top degree is sum (N_i - 1), so d^(total+1) = 0 on every monomial
  for (int m = 1; m <= total + 1; ++m) {
    std::vector<DepthForm> next;
    for (const auto& f : current) {
      auto g = differential(f);
      if (!g.is_structurally_zero()) next.push_back(std::move(g));
    }
    if (next.empty()) return m;
    current = std::move(next);
  }
  throw Error("nilpotency search did not terminate");
}

AffineMap::AffineMap(RationalMatrix A, std::vector<Rational> b) : A_(std::move(A)), b_(std::move(b)) {
  if (A_.rows() != A_.cols() || A_.rows() != b_.size()) throw DimensionError("affine map shape mismatch");
  if (A_.determinant() == 0) throw DomainError("affine map is singular");
}

AffineMap AffineMap::identity(std::size_t k) { return AffineMap(RationalMatrix::identity(k), std::vector<Rational>(k, 0)); }

AffineMap compose(const AffineMap& g, const AffineMap& f) {
  if (g.dimension() != f.dimension()) throw DimensionError("affine maps have different dimensions");
  const std::size_t k = f.dimension();
  std::vector<Rational> b(k);
  for (std::size_t i = 0; i < k; ++i) {
    b[i] = g.offset()[i];
    for (std::size_t j = 0; j < k; ++j) b[i] += g.linear()(i, j) * f.offset()[j];
  }
  return AffineMap(g.linear() * f.linear(), b);
}

DepthForm affine_pullback(const AffineMap& f, const DepthForm& a) {
  const auto& profile = a.profile();
  const std::size_t k = profile.size();
  if (f.dimension() != k) throw DimensionError("affine map and form have different dimensions");
  if (std::adjacent_find(profile.begin(), profile.end(), std::not_equal_to<>()) != profile.end())
    throw DomainError("affine pullback needs a uniform depth profile");

  std::map<int, ScalarExpr> substitution;
  for (std::size_t i = 0; i < k; ++i) {
    ScalarExpr e(f.offset()[i]);
    for (std::size_t j = 0; j < k; ++j)
      if (f.linear()(i, j) != 0) e += ScalarExpr(f.linear()(i, j)) * ScalarExpr::variable(static_cast<int>(j) + 1);
    substitution.emplace(static_cast<int>(i) + 1, e);
  }
  auto pulled_generator = [&](std::size_t i, int m) {
    DepthForm g(profile);
    for (std::size_t j = 0; j < k; ++j) {
      if (f.linear()(i, j) == 0) continue;
      DepthIndex idx{std::vector<int>(k, 0)};
      idx.depth[j] = m;
      g.add(idx, ScalarExpr(f.linear()(i, j)));
    }
    return g;
  };

  DepthForm r(profile);
  for (const auto& [idx, c] : a.components()) {
    DepthForm term = DepthForm::function(profile, c.substitute(substitution));
    for (std::size_t i = 0; i < k; ++i)
      if (idx.depth[i] > 0) term = multiply(term, pulled_generator(i, idx.depth[i]));
    r += term;
  }
  return r;
}

bool chart_compatible(const DepthForm& alpha_u, const DepthForm& alpha_v, const AffineMap& transition,
                      const ZeroTest& test) {
  return (affine_pullback(transition, alpha_v) - alpha_u).is_zero(test);
}

} // namespace ndga
