#pragma once

// Brute-force reference implementations, written independently of the
// library algorithms and used only to cross-check them on small inputs.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lw/graph.hpp"
#include "lw/weights.hpp"

namespace oracle {

using lw::Graph;
using lw::Vertex;
using lw::VertexSet;

/// Adjacency bitmasks for graphs on at most 16 vertices.
std::vector<std::uint32_t> masks(const Graph& g);

/// Shortest cycle found by enumerating every simple cycle through DFS over
/// vertices larger than the cycle's minimum. Exponential; sparse or tiny graphs.
std::optional<int> girth_by_cycles(const Graph& g);

/// Canonical form over all relabelings that preserve a degree-based vertex
/// invariant: the lexicographically smallest upper-triangle bit string.
std::string canonical(const Graph& g);

/// Every graph on n vertices up to isomorphism, n <= 7, built by adding one
/// vertex with every possible neighborhood and deduplicating on `canonical`.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> all_connected_graphs(int n);

/// Canonical forms of every graph obtainable from g by deleting vertices and
/// contracting edges into at most `max_parts` vertices. Enumerates every
/// partial partition of V(g) into connected blocks.
std::set<std::string> induced_minors(const Graph& g, int max_parts);

/// g has K_4 as a minor: four disjoint connected sets, pairwise adjacent.
bool has_k4_minor(const Graph& g);

/// Treewidth as the best width over all elimination orders (n <= 8).
int treewidth_by_orders(const Graph& g);

/// Every component of G - X has weight <= 1/2, components found by a
/// separate flood fill.
bool balanced(const Graph& g, const lw::WeightFunction& w, const VertexSet& x);

/// Smallest balanced set, lexicographically first among those of that size,
/// by enumerating every subset in order of size.
std::optional<VertexSet> min_balanced(const Graph& g, const lw::WeightFunction& w, int max_size);

/// All induced u-v paths, each listed from u to v.
std::vector<std::vector<Vertex>> induced_paths(const Graph& g, Vertex u, Vertex v);

/// Largest family of induced u-v paths with pairwise disjoint and
/// anticomplete interiors, by trying every subfamily.
int max_path_family(const Graph& g, Vertex u, Vertex v);

/// Some 4-subset x1 < x2 < x3 < x4 in `order` induces exactly {x1x3, x2x4}.
bool has_crossing_quadruple(const Graph& g, const std::vector<Vertex>& order);

}  // namespace oracle
