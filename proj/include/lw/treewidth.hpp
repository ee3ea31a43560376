#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lw/graph.hpp"

namespace lw {

struct TreeDecomposition {
  Graph tree;
  std::vector<VertexSet> bags;

  /// Largest bag size minus one; -1 for the decomposition of the empty graph.
  int width() const;
};

/// Reason the decomposition is invalid for `g`, or nullopt when it is valid:
/// the tree is a tree, every vertex and edge is in a bag, and the bags
/// holding each vertex form a subtree.
std::optional<std::string> validate(const Graph& g, const TreeDecomposition& td);

/// Bags {v} + later neighbors in the fill graph, each attached to the bag of
/// its earliest-eliminated later neighbor; separate roots are chained.
TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order);

/// Greedy min-fill elimination order, ties by smallest id. An upper bound only.
std::vector<Vertex> min_fill_order(const Graph& g);
TreeDecomposition min_fill_decomposition(const Graph& g);

/// Minor-min-width: repeatedly contract a minimum-degree vertex into its
/// minimum-degree neighbor, recording the largest minimum degree seen.
int treewidth_lower_bound(const Graph& g);

struct TreewidthResult {
  int width = -1;
  TreeDecomposition decomposition;
  /// False when the result only comes from the min-fill heuristic.
  bool exact = true;
  std::uint64_t nodes = 0;
};

inline constexpr Vertex kTreewidthCap = 25;

/// Exact treewidth by depth-first search over elimination orders on vertex
/// bitmasks, with memoized dead states, a simplicial-vertex rule and the
/// min-fill and minor-min-width bounds. Throws CapExceeded above `cap`
/// vertices (at most 64).
TreewidthResult exact_treewidth(const Graph& g, Vertex cap = kTreewidthCap);

}  // namespace lw
