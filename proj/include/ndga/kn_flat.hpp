#pragma once

// Expansion of (delta + w)^N in powers of a nilpotent derivation delta,
// through signed paths in the lattice of vectors s = (s_1, ..., s_n).

#include "ndga/graded_forms.hpp"

#include <map>
#include <string>
#include <vector>

namespace ndga {

/// Vector s of non-negative integers; the word w^(s1) ... w^(sn), where
/// w^(a) is delta applied a times to w.
using VertexS = std::vector<int>;

int vertex_sum(const VertexS& s);
/// N(s) = N - |s| - l(s).
int vertex_level(const VertexS& s, int N);
/// "()", "(0,1)"
std::string render_vertex(const VertexS& s);

struct WeightedEdge {
  VertexS source;
  VertexS target;
  int weight = 1;
};

/// Prepend-zero edge, self-loop, then one raise per position.
std::vector<WeightedEdge> successors(const VertexS& s);

struct WeightedPath {
  std::vector<VertexS> vertices; // N + 1 vertices starting at ()
  int weight = 1;
};

/// Every length-N path from () to s, depth first in successor order.
std::vector<WeightedPath> enumerate_paths(int N, const VertexS& s);

/// Signed number of length-N paths from () to s.
long long c_coefficient(const VertexS& s, int N);

/// All s with |s| + l(s) <= N and every s_i < K, ordered by length and then
/// by the reversed sequence.
std::vector<VertexS> admissible_vertices(int N, int K);

/// Integer combination of words w^(s); words never commute.
using DeltaWord = std::map<VertexS, long long>;

/// Element k is c_k in (delta + w)^N = sum_{k<N} c_k delta^k + delta^N.
using DeltaExpansion = std::vector<DeltaWord>;

DeltaExpansion nabla_power_expansion(int N, int K);

/// Expands (delta + w)^N as 2^N words and normal-orders them with
/// delta w^(a) -> w^(a+1) + (-1)^(a+1) w^(a) delta, dropping w^(a) for a >= K.
DeltaExpansion oracle_expansion(int N, int K);

/// Terms of nabla_power_expansion with l(s) = 1: the part linear in t when
/// w is replaced by t w with t^2 = 0.
DeltaExpansion infinitesimal_expansion(int N, int K);

/// "d2(w) + d(w)*w + w^3", "0"
std::string render_delta_word(const DeltaWord& c);

/// Concrete delta = d + w0 for a background connection w0 (w0 = 0 is the
/// de Rham differential). Acts on E-valued forms by d + w0 ^ and on
/// End-valued forms by the graded commutator.
class Differential {
public:
  explicit Differential(Connection background) : background_(std::move(background)) {}
  static Differential de_rham(int base_dim, std::size_t fiber) { return Differential(Connection::zero(base_dim, fiber)); }

  const Connection& background() const { return background_; }
  EndValuedForm apply(const EndValuedForm& alpha) const;
  EndValuedForm apply_end(const EndValuedForm& beta) const;

private:
  Connection background_;
};

/// C_k = sum_s c(s) w^(s1) ^ ... ^ w^(sn) with w^(a) = delta_End^a(w).
std::vector<EndValuedForm> instantiate(const DeltaExpansion& expansion, const Connection& w, const Differential& delta);

/// sum_k C_k ^ delta^k(alpha) + delta^N(alpha), N = coefficients.size().
EndValuedForm apply_instantiated(const std::vector<EndValuedForm>& coefficients, const Differential& delta,
                                 const EndValuedForm& alpha);

} // namespace ndga
