#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lw/graph.hpp"
#include "lw/layered_wheel.hpp"
#include "lw/series_parallel.hpp"
#include "lw/treewidth.hpp"
#include "lw/weights.hpp"

namespace lw {

/// Every component of G - X has weight at most 1/2.
bool is_balanced_separator(const Graph& g, const WeightFunction& w, const VertexSet& x);

/// Weight of the heaviest component of G - X (numerator over w.den).
std::uint64_t heaviest_component(const Graph& g, const WeightFunction& w, const VertexSet& x);

/// A smallest balanced separator of size at most `max_size`; among those of
/// that size, the lexicographically first. For each prefix of size s - 1 the
/// last vertex is found in one articulation-point pass over the unique heavy
/// component, so the search costs C(n, s - 1) linear passes.
std::optional<VertexSet> min_balanced_separator(const Graph& g, const WeightFunction& w, int max_size);

/// Walks the tree towards the heavy side until the current bag is a balanced
/// separator. Throws PreconditionError if `td` is invalid for `g` or `w` is
/// not weak.
VertexSet separator_from_decomposition(const Graph& g, const WeightFunction& w, const TreeDecomposition& td);

/// Every stage of the separator assembly for an induced subgraph H of a
/// layered wheel under a weight function w.
struct SeparatorPipelineState {
  Graph h;
  std::vector<VertexClass> classes;
  WeightFunction w;

  HPrimeResult h_prime;
  WeightFunction w_prime;
  /// False when H' has no balanced separator of size at most 3.
  bool k_prime_found = false;
  /// H' vertices.
  VertexSet k_prime;
  VertexSet k_prime_big_high, k_prime_big_low, k_prime_medium, k_prime_small;
  /// Big vertices of H behind the big parts of K'.
  VertexSet y_big_high, y_big_low;

  /// H'' as an induced model of H: first the N side (singletons), then the D side.
  Graph h_dprime;
  std::vector<VertexSet> h_dprime_sets;
  int n_side = 0;
  WeightFunction w_dprime;
  bool h_dprime_bipartite = false;

  TreeDecomposition td_dprime;
  int td_width = -1;
  /// False when the decomposition came from the min-fill heuristic.
  bool td_exact = true;
  /// H'' vertices; empty when the empty set is already balanced in H''.
  VertexSet k_dprime;
  /// K''_N + N_{H''}(K''_D), as H'' vertices.
  VertexSet sep_dprime;
  /// The final separator, as H vertices.
  VertexSet k;
};

/// Runs H -> H' -> K' -> H'' -> K'' -> K. Throws PreconditionError unless
/// `classes` covers H and `w` is a proper weight function on H. When H' has
/// no small separator the state stops after K' with `k_prime_found` false.
SeparatorPipelineState build_pipeline(const Graph& h, const std::vector<VertexClass>& classes,
                                      const WeightFunction& w, Vertex exact_cap = kTreewidthCap);

struct BoundCheck {
  std::string name;
  std::string claim;
  bool passed = true;
  std::string detail{};
};

struct SeparatorReport {
  std::vector<BoundCheck> checks;
  bool all_passed() const;
};

/// K is w-balanced in H; |K| <= 21 + 9 (width + 1) with the measured width of
/// the H'' decomposition; K''_N + N(K''_D) is w''-balanced in H'' with size
/// at most 9 (width + 1).
SeparatorReport verify_H_separator_bound(const SeparatorPipelineState& state);

/// On H' built from an induced subgraph of G_k^g: lone medium and small
/// vertices have degree at most 2, and distinct big sets are at distance d
/// with 3 (d + 2) >= 2^g.
SeparatorReport verify_h_prime_properties(const HPrimeResult& h_prime, int g);

}  // namespace lw
