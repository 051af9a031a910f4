#include "ndga/kn_flat.hpp"

#include "ndga/error.hpp"

#include <algorithm>
#include <numeric>

namespace ndga {

int vertex_sum(const VertexS& s) { return std::accumulate(s.begin(), s.end(), 0); }

int vertex_level(const VertexS& s, int N) { return N - vertex_sum(s) - static_cast<int>(s.size()); }

std::string render_vertex(const VertexS& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + ")";
}

std::vector<WeightedEdge> successors(const VertexS& s) {
  std::vector<WeightedEdge> edges;
  VertexS prepended{0};
  prepended.insert(prepended.end(), s.begin(), s.end());
  edges.push_back({s, prepended, 1});
  edges.push_back({s, s, (vertex_sum(s) + static_cast<int>(s.size())) % 2 ? -1 : 1});
  int before = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    VertexS raised = s;
    ++raised[i];
    // (-1)^{|s_<i| + i - 1} with 1-based i
    edges.push_back({s, raised, (before + static_cast<int>(i)) % 2 ? -1 : 1});
    before += s[i];
  }
  return edges;
}

namespace {

int rank(const VertexS& s) { return vertex_sum(s) + static_cast<int>(s.size()); }

// Every edge keeps or raises |s| + l(s) by one, and never shortens s.
bool can_reach(const VertexS& from, const VertexS& to) {
  return rank(from) <= rank(to) && from.size() <= to.size();
}

} // namespace

std::vector<WeightedPath> enumerate_paths(int N, const VertexS& s) {
  if (N < 1) throw DomainError("enumerate_paths needs N >= 1");
  std::vector<WeightedPath> out;
  WeightedPath current;
  current.vertices.push_back({});
  auto dfs = [&](auto&& self, int steps_left) -> void {
    const VertexS& here = current.vertices.back();
    if (steps_left == 0) {
      if (here == s) out.push_back(current);
      return;
    }
    if (rank(s) - rank(here) > steps_left) return;
    for (const auto& e : successors(here)) {
      if (!can_reach(e.target, s)) continue;
      current.vertices.push_back(e.target);
      current.weight *= e.weight;
      self(self, steps_left - 1);
      current.weight *= e.weight;
      current.vertices.pop_back();
    }
  };
  dfs(dfs, N);
  return out;
}

long long c_coefficient(const VertexS& s, int N) {
  if (N < 0) return 0;
  std::map<VertexS, long long> layer{{{}, 1}};
  for (int step = 0; step < N; ++step) {
    std::map<VertexS, long long> next;
    for (const auto& [v, c] : layer)
      for (const auto& e : successors(v))
        if (can_reach(e.target, s)) next[e.target] += e.weight * c;
    layer = std::move(next);
  }
  auto it = layer.find(s);
  return it == layer.end() ? 0 : it->second;
}

std::vector<VertexS> admissible_vertices(int N, int K) {
  if (N < 1 || K < 1) throw DomainError("admissible_vertices needs N >= 1 and K >= 1");
  std::vector<VertexS> out;
  VertexS cur;
  auto rec = [&](auto&& self, int budget) -> void {
    out.push_back(cur);
    // appending an entry a costs a + 1
    for (int a = 0; a < K && a + 1 <= budget; ++a) {
      cur.push_back(a);
      self(self, budget - a - 1);
      cur.pop_back();
    }
  };
  rec(rec, N);
  std::sort(out.begin(), out.end(), [](const VertexS& x, const VertexS& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.rbegin(), x.rend(), y.rbegin(), y.rend());
  });
  return out;
}

DeltaExpansion nabla_power_expansion(int N, int K) {
  if (N < 1 || K < 2) throw DomainError("nabla_power_expansion needs N >= 1 and K >= 2");
  DeltaExpansion out(static_cast<std::size_t>(N));
  for (const auto& s : admissible_vertices(N, K)) {
    const int k = vertex_level(s, N);
    if (k < 0 || k >= N) continue;
    const long long c = c_coefficient(s, N);
    if (c != 0) out[static_cast<std::size_t>(k)][s] = c;
  }
  return out;
}

DeltaExpansion oracle_expansion(int N, int K) {
  if (N < 1 || K < 2) throw DomainError("oracle_expansion needs N >= 1 and K >= 2");
  constexpr int delta = -1;
  using Word = std::vector<int>;
  std::map<Word, long long> pending;
  for (unsigned mask = 0; mask < (1u << N); ++mask) {
    Word w;
    for (int i = 0; i < N; ++i) w.push_back((mask >> i) & 1u ? 0 : delta);
    pending[w] += 1;
  }
  std::map<Word, long long> normal;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word& w = node.key();
    const long long c = node.mapped();
    if (c == 0) continue;
    std::size_t pos = 0;
    while (pos + 1 < w.size() && !(w[pos] == delta && w[pos + 1] != delta)) ++pos;
    if (pos + 1 >= w.size()) {
      normal[w] += c;
      continue;
    }
    const int a = w[pos + 1];
    if (a + 1 < K) {
      Word raised = w;
      raised.erase(raised.begin() + static_cast<std::ptrdiff_t>(pos));
      raised[pos] = a + 1;
      pending[raised] += c;
    }
    Word swapped = w;
    std::swap(swapped[pos], swapped[pos + 1]);
    pending[swapped] += (a + 1) % 2 ? -c : c;
  }

  DeltaExpansion out(static_cast<std::size_t>(N));
  for (const auto& [w, c] : normal) {
    if (c == 0) continue;
    const auto first_delta = std::find(w.begin(), w.end(), delta);
    const VertexS s(w.begin(), first_delta);
    const auto k = static_cast<std::size_t>(w.end() - first_delta);
    if (k >= static_cast<std::size_t>(N)) continue;
    out[k][s] += c;
  }
  for (auto& c : out) std::erase_if(c, [](const auto& kv) { return kv.second == 0; });
  return out;
}

DeltaExpansion infinitesimal_expansion(int N, int K) {
  if (N < 2) throw DomainError("infinitesimal_expansion needs N >= 2");
  auto out = nabla_power_expansion(N, K);
  for (auto& c : out) std::erase_if(c, [](const auto& kv) { return kv.first.size() != 1; });
  return out;
}

std::string render_delta_word(const DeltaWord& c) {
  std::vector<VertexS> order;
  for (const auto& [s, v] : c) order.push_back(s);
  std::sort(order.begin(), order.end(), [](const VertexS& x, const VertexS& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(y.begin(), y.end(), x.begin(), x.end());
  });
  auto letter = [](int a) {
    if (a == 0) return std::string("w");
    if (a == 1) return std::string("d(w)");
    return "d" + std::to_string(a) + "(w)";
  };
  std::string out;
  for (const auto& s : order) {
    const long long v = c.at(s);
    std::string word;
    for (std::size_t i = 0; i < s.size();) {
      std::size_t j = i;
      while (j < s.size() && s[j] == s[i]) ++j;
      if (!word.empty()) word += '*';
      word += letter(s[i]);
      if (j - i > 1) word += '^' + std::to_string(j - i);
      i = j;
    }
    if (word.empty()) word = "1";
    const long long mag = v < 0 ? -v : v;
    std::string term = mag == 1 ? word : std::to_string(mag) + "*" + word;
    if (out.empty())
      out = v < 0 ? "-" + term : term;
    else
      out += (v < 0 ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

EndValuedForm Differential::apply(const EndValuedForm& alpha) const { return nabla_apply(background_, alpha); }

EndValuedForm Differential::apply_end(const EndValuedForm& beta) const {
  EndValuedForm out = exterior_d(beta);
  const auto& w0 = background_.form();
  if (w0.is_structurally_zero()) return out;
  out += wedge(w0, beta);
  for (int p = 0; p <= beta.base_dim(); ++p) {
    const auto part = beta.homogeneous_part(p);
    if (part.is_structurally_zero()) continue;
    const auto right = wedge(part, w0);
    out += p % 2 ? right : -right;
  }
  return out;
}

std::vector<EndValuedForm> instantiate(const DeltaExpansion& expansion, const Connection& w, const Differential& delta) {
  const auto& bg = delta.background();
  if (bg.base_dim() != w.base_dim() || bg.fiber_dim() != w.fiber_dim())
    throw DimensionError("connection and differential live on different bundles");
  int max_a = 0;
  for (const auto& c : expansion)
    for (const auto& [s, v] : c)
      for (int a : s) max_a = std::max(max_a, a);
  std::vector<EndValuedForm> derivatives{w.form()};
  for (int a = 1; a <= max_a; ++a) derivatives.push_back(delta.apply_end(derivatives.back()));

  std::vector<EndValuedForm> out;
  const auto one = EndValuedForm::identity(w.base_dim(), w.fiber_dim());
  for (const auto& c : expansion) {
    EndValuedForm total(w.base_dim(), w.fiber_dim(), w.fiber_dim());
    for (const auto& [s, v] : c) {
      EndValuedForm prod = one;
      for (int a : s) prod = wedge(prod, derivatives[static_cast<std::size_t>(a)]);
      total += ScalarExpr(Rational(static_cast<long>(v))) * prod;
    }
    out.push_back(std::move(total));
  }
  return out;
}

EndValuedForm apply_instantiated(const std::vector<EndValuedForm>& coefficients, const Differential& delta,
                                 const EndValuedForm& alpha) {
  EndValuedForm total(alpha.base_dim(), alpha.rows(), alpha.cols());
  EndValuedForm power = alpha;
  for (const auto& c : coefficients) {
    total += wedge(c, power);
    power = delta.apply(power);
  }
  return total + power;
}

} // namespace ndga
