#include "lw/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <string>

#include "lw/errors.hpp"

namespace lw {

void normalize(VertexSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

VertexSet make_vertex_set(std::vector<Vertex> members) {
  normalize(members);
  return members;
}

Graph Graph::from_edges(Vertex n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError("negative vertex count");
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n = " +
                       std::to_string(n));
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  g.targets_.reserve(directed.size());
  for (auto [u, v] : directed) {
    ++g.offsets_[u + 1];
    g.targets_.push_back(v);
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < num_vertices(); ++v) best = std::max(best, degree(v));
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet members) {
  normalize(members);
  const Vertex n = g.num_vertices();
  InducedSubgraph out;
  out.old_to_new.assign(n, -1);
  for (Vertex v : members) {
    if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    out.old_to_new[v] = static_cast<Vertex>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (Vertex v : out.new_to_old) {
    for (Vertex w : g.neighbors(v)) {
      if (v < w && out.old_to_new[w] >= 0) edges.emplace_back(out.old_to_new[v], out.old_to_new[w]);
    }
  }
  out.graph = Graph::from_edges(static_cast<Vertex>(out.new_to_old.size()), edges);
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  std::vector<char> drop(g.num_vertices(), 0);
  for (Vertex v : removed) {
    if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
    drop[v] = 1;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced_subgraph(g, std::move(keep));
}

std::vector<int> bfs_distances(const Graph& g, Vertex source, int max_depth) {
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  if (!g.contains(source)) throw GraphError("vertex " + std::to_string(source) + " out of range");
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (dist[v] >= max_depth) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, source, std::numeric_limits<int>::max());
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
  if (!g.contains(v)) throw GraphError("vertex " + std::to_string(v) + " out of range");
  int d = bfs_distances(g, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

namespace {

// Distance from u to v in G - uv, searching no deeper than `limit`.
int distance_without_edge(const Graph& g, Vertex u, Vertex v, int limit, std::vector<int>& dist,
                          std::vector<Vertex>& touched) {
  std::deque<Vertex> queue{u};
  dist[u] = 0;
  touched.push_back(u);
  int found = kUnreachable;
  while (!queue.empty() && found == kUnreachable) {
    Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] >= limit) break;
    for (Vertex y : g.neighbors(x)) {
      if (x == u && y == v) continue;
      if (dist[y] != kUnreachable) continue;
      dist[y] = dist[x] + 1;
      touched.push_back(y);
      if (y == v) {
        found = dist[y];
        break;
      }
      queue.push_back(y);
    }
  }
  for (Vertex t : touched) dist[t] = kUnreachable;
  touched.clear();
  return found;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  // Per-edge formulation: the shortest cycle through uv is uv plus a shortest
  // u-v path in G - uv.
  std::optional<int> best;
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> touched;
  for (auto [u, v] : g.edges()) {
    int limit = best ? *best - 2 : std::numeric_limits<int>::max();
    if (limit < 2) break;
    int d = distance_without_edge(g, u, v, limit, dist, touched);
    if (d != kUnreachable && (!best || d + 1 < *best)) best = d + 1;
  }
  return best;
}

std::vector<int> component_labels(const Graph& g, const std::vector<char>& removed, int& count) {
  const Vertex n = g.num_vertices();
  std::vector<int> label(n, -1);
  std::vector<Vertex> stack;
  count = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (label[s] != -1 || (!removed.empty() && removed[s])) continue;
    label[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == -1 && (removed.empty() || !removed[w])) {
          label[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return label;
}

std::vector<VertexSet> components(const Graph& g) {
  int count = 0;
  auto label = component_labels(g, {}, count);
  std::vector<VertexSet> out(count);
  for (Vertex v = 0; v < g.num_vertices(); ++v) out[label[v]].push_back(v);
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_connected_subset(const Graph& g, const VertexSet& members) {
  if (members.empty()) return true;
  std::vector<char> in(g.num_vertices(), 0), seen(g.num_vertices(), 0);
  for (Vertex v : members) in[v] = 1;
  std::vector<Vertex> stack{members.front()};
  seen[members.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == members.size();
}

bool induces_path(const Graph& g, const VertexSet& members) {
  if (members.empty()) return false;
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : members) in[v] = 1;
  std::size_t edge_ends = 0;
  for (Vertex v : members) {
    std::size_t d = 0;
    for (Vertex w : g.neighbors(v)) d += in[w];
    if (d > 2) return false;
    edge_ends += d;
  }
  return edge_ends / 2 + 1 == members.size() && is_connected_subset(g, members);
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    auto a = g.neighbors(u);
    auto b = g.neighbors(v);
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        return std::array<Vertex, 3>{u, v, *i};
      }
    }
  }
  return std::nullopt;
}

bool is_triangle_free(const Graph& g) { return !find_triangle(g).has_value(); }

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Graph& a, const Graph& b) : a_(a), b_(b) {
    const Vertex n = a.num_vertices();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    // Highest degree first, then grow along neighbors so adjacency checks bite early.
    std::vector<char> placed(n, 0);
    std::vector<Vertex> ordered;
    while (static_cast<Vertex>(ordered.size()) < n) {
      Vertex best = -1;
      int best_links = -1;
      for (Vertex v = 0; v < n; ++v) {
        if (placed[v]) continue;
        int links = 0;
        for (Vertex w : a.neighbors(v)) links += placed[w];
        if (best == -1 || links > best_links || (links == best_links && a.degree(v) > a.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[best] = 1;
      ordered.push_back(best);
    }
    order_ = std::move(ordered);
    map_.assign(n, -1);
    used_.assign(n, 0);
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    Vertex v = order_[depth];
    for (Vertex cand = 0; cand < b_.num_vertices(); ++cand) {
      if (used_[cand] || b_.degree(cand) != a_.degree(v)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        Vertex u = order_[i];
        ok = a_.has_edge(u, v) == b_.has_edge(map_[u], cand);
      }
      if (!ok) continue;
      map_[v] = cand;
      used_[cand] = 1;
      if (extend(depth + 1)) return true;
      used_[cand] = 0;
      map_[v] = -1;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return std::nullopt;
  std::vector<std::size_t> da, db;
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<Vertex>(perm.size()) != g.num_vertices()) throw GraphError("permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.num_vertices(), edges);
}

}  // namespace lw
