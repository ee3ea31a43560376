#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lw {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted ascending, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates in place.
void normalize(VertexSet& set);
VertexSet make_vertex_set(std::vector<Vertex> members);

/// Immutable simple undirected graph on the dense ids [0, n).
///
/// Adjacency is stored in CSR form with every neighbor list sorted strictly
/// ascending, so `has_edge` is a binary search and neighbor spans can be
/// merged without extra sorting.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Parallel edges given in either
  /// orientation are merged; self-loops and out-of-range ids throw GraphError.
  static Graph from_edges(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const { return static_cast<Vertex>(offsets_.empty() ? 0 : offsets_.size() - 1); }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < num_vertices(); }

  /// All edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;
  std::size_t max_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

struct InducedSubgraph {
  Graph graph;
  /// old id -> new id, or -1 when the vertex was dropped.
  std::vector<Vertex> old_to_new;
  /// new id -> old id (the sorted member list).
  std::vector<Vertex> new_to_old;
};

/// G[X]. Throws GraphError if X holds an out-of-range id.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet members);
/// G minus X.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);

inline constexpr int kUnreachable = -1;

/// BFS distances from `source`; kUnreachable for other components.
std::vector<int> bfs_distances(const Graph& g, Vertex source);
/// BFS distances, exploring no further than `max_depth`.
std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_depth);
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

/// Length of a shortest cycle, or nullopt for a forest.
std::optional<int> girth(const Graph& g);

std::vector<VertexSet> components(const Graph& g);
/// Component index for every vertex, vertices in `removed` get -1.
std::vector<int> component_labels(const Graph& g, const std::vector<char>& removed, int& count);
bool is_connected(const Graph& g);
/// True when G[X] is connected (the empty set counts as connected).
bool is_connected_subset(const Graph& g, const VertexSet& members);
/// True when G[X] is a path (a single vertex is a path of length 0).
bool induces_path(const Graph& g, const VertexSet& members);

bool is_triangle_free(const Graph& g);
std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g);

/// Vertex bijection f with uv in E(a) iff f(u)f(v) in E(b), by backtracking.
/// Intended for small graphs (tests, round-trip checks).
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);
inline bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

/// Relabels vertex v as perm[v].
Graph permute(const Graph& g, std::span<const Vertex> perm);

}  // namespace lw
