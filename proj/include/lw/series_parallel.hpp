#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "lw/graph.hpp"
#include "lw/layered_wheel.hpp"

namespace lw {

struct ReductionStep {
  enum class Kind : std::uint8_t { remove_isolated, remove_leaf, suppress };
  Kind kind;
  Vertex vertex;
  /// Neighbors at the time of the step (-1 when absent).
  Vertex a = -1;
  Vertex b = -1;
};
std::string_view to_string(ReductionStep::Kind k);

struct SeriesParallelResult {
  bool series_parallel = false;
  std::vector<ReductionStep> trace;
  /// When not series-parallel: the irreducible remainder, every vertex of
  /// which has at least three distinct neighbors. It is a minor of the input,
  /// so it certifies a K_4 minor.
  Graph core;
  VertexSet core_vertices;
};

/// Decides treewidth <= 2 by exhaustive reduction: delete vertices of degree
/// at most one, suppress degree-2 vertices, merge the parallel edges that
/// suppression creates.
SeriesParallelResult is_series_parallel(const Graph& g);

struct TwoTerminalGraph {
  Graph graph;
  Vertex source = 0;
  Vertex sink = 1;
};

/// True when g + st is reducible, which is the case exactly when g is a
/// subgraph of an (s,t)-series-parallel graph.
bool is_two_terminal_series_parallel(const TwoTerminalGraph& g);

/// H' vertices come in three kinds: N^M_H[b] for a big b, a lone medium
/// vertex, a lone small vertex.
struct HPrimeResult {
  Graph h_prime;
  std::vector<VertexSet> branch_map;
  std::vector<VertexClass> kind;
  /// For a big branch set, its big vertex; -1 otherwise.
  std::vector<Vertex> big_of;
  /// H vertex -> H' vertex.
  std::vector<Vertex> owner;
};

/// Contracts every N^M_H[b] = {b} + (N_H(b) & M) of H. Big sets come first in
/// increasing order of b, then the remaining vertices as singletons in id
/// order. Throws PreconditionError if `class_of` does not cover V(H).
HPrimeResult contract_to_h_prime(const Graph& h, const std::vector<VertexClass>& class_of);

/// The two-terminal graph c(F) together with the classification used to build it.
struct CFResult {
  TwoTerminalGraph contracted;
  std::vector<VertexSet> branch_sets;
  VertexSet b_prime;
  VertexSet s_prime;
  VertexSet lower;
  bool series_parallel = false;
};

/// Checks hypotheses (i)-(iii) for F with s-t paths `paths` (each listed from
/// source to sink), contracts {N'_F[v] : v in B'(F)}, keeps S'(F) and the
/// terminals as singletons, and runs the recognizer on the result. A failed
/// hypothesis throws HypothesisError naming it, with a witness vertex.
CFResult c_of_F(const TwoTerminalGraph& f, const std::vector<std::vector<Vertex>>& paths);

/// F for H = G - X: the full instance without the big-medium edges at big
/// vertices of X, plus a source joined to every P_l^0 and a sink joined to
/// every P_l^(2^(k+g)). Source and sink get the two ids after the instance.
struct TerminalInstance {
  TwoTerminalGraph f;
  std::vector<std::vector<Vertex>> paths;
};
TerminalInstance terminal_instance(const LayeredWheel& wheel, const VertexSet& removed);

}  // namespace lw
