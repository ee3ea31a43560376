#include "lw/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_set>

#include "lw/errors.hpp"

namespace lw {

int TreeDecomposition::width() const {
  int w = -1;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::optional<std::string> validate(const Graph& g, const TreeDecomposition& td) {
  const Vertex nodes = td.tree.num_vertices();
  if (static_cast<Vertex>(td.bags.size()) != nodes) return "bag count differs from tree size";
  if (nodes == 0) return "tree has no nodes";
  if (td.tree.num_edges() + 1 != static_cast<std::size_t>(nodes) || !is_connected(td.tree)) return "tree is not a tree";

  std::vector<std::vector<Vertex>> where(g.num_vertices());
  for (Vertex t = 0; t < nodes; ++t) {
    for (Vertex v : td.bags[t]) {
      if (!g.contains(v)) return "bag " + std::to_string(t) + " holds out-of-range vertex " + std::to_string(v);
      if (!where[v].empty() && where[v].back() == t) return "bag " + std::to_string(t) + " repeats a vertex";
      where[v].push_back(t);
    }
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (where[v].empty()) return "vertex " + std::to_string(v) + " is in no bag";
    if (!is_connected_subset(td.tree, make_vertex_set(where[v]))) {
      return "bags holding vertex " + std::to_string(v) + " are not connected in the tree";
    }
  }
  for (auto [u, v] : g.edges()) {
    bool found = false;
    for (Vertex t : where[u]) {
      if (std::binary_search(td.bags[t].begin(), td.bags[t].end(), v)) {
        found = true;
        break;
      }
    }
    if (!found) return "edge " + std::to_string(u) + "-" + std::to_string(v) + " is in no bag";
  }
  return std::nullopt;
}

namespace {

std::vector<std::set<Vertex>> adjacency_sets(const Graph& g) {
  std::vector<std::set<Vertex>> adj(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  return adj;
}

}  // namespace

TreeDecomposition decomposition_from_elimination_order(const Graph& g, const std::vector<Vertex>& order) {
  const Vertex n = g.num_vertices();
  if (static_cast<Vertex>(order.size()) != n) throw GraphError("elimination order has the wrong length");
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!g.contains(order[i]) || pos[order[i]] != -1) throw GraphError("elimination order is not a permutation");
    pos[order[i]] = static_cast<int>(i);
  }
  TreeDecomposition td;
  if (n == 0) {
    td.tree = Graph::from_edges(1, {});
    td.bags.push_back({});
    return td;
  }
  auto adj = adjacency_sets(g);
  std::vector<Edge> tree_edges;
  Vertex last_root = -1;
  for (Vertex i = 0; i < n; ++i) {
    const Vertex v = order[i];
    std::vector<Vertex> later;
    for (Vertex u : adj[v])
      if (pos[u] > i) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b) {
        adj[later[a]].insert(later[b]);
        adj[later[b]].insert(later[a]);
      }
    VertexSet bag = later;
    bag.push_back(v);
    td.bags.push_back(make_vertex_set(std::move(bag)));
    if (later.empty()) {
      if (last_root >= 0) tree_edges.emplace_back(last_root, i);
      last_root = i;
    } else {
      Vertex parent = *std::min_element(later.begin(), later.end(), [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
      tree_edges.emplace_back(i, pos[parent]);
    }
  }
  td.tree = Graph::from_edges(n, tree_edges);
  return td;
}

std::vector<Vertex> min_fill_order(const Graph& g) {
  const Vertex n = g.num_vertices();
  auto adj = adjacency_sets(g);
  std::vector<char> alive(n, 1);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex step = 0; step < n; ++step) {
    Vertex best = -1;
    std::size_t best_fill = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      std::size_t fill = 0;
      for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
        for (auto b = std::next(a); b != adj[v].end(); ++b)
          if (!adj[*a].count(*b)) ++fill;
      if (best == -1 || fill < best_fill) {
        best = v;
        best_fill = fill;
        if (fill == 0) break;
      }
    }
    std::vector<Vertex> nb(adj[best].begin(), adj[best].end());
    for (Vertex u : nb) adj[u].erase(best);
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        adj[nb[a]].insert(nb[b]);
        adj[nb[b]].insert(nb[a]);
      }
    adj[best].clear();
    alive[best] = 0;
    order.push_back(best);
  }
  return order;
}

TreeDecomposition min_fill_decomposition(const Graph& g) {
  return decomposition_from_elimination_order(g, min_fill_order(g));
}

int treewidth_lower_bound(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n == 0) return -1;
  auto adj = adjacency_sets(g);
  std::vector<char> alive(n, 1);
  int bound = 0;
  for (Vertex left = n; left > 1; --left) {
    Vertex v = -1;
    for (Vertex x = 0; x < n; ++x)
      if (alive[x] && (v == -1 || adj[x].size() < adj[v].size())) v = x;
    bound = std::max(bound, static_cast<int>(adj[v].size()));
    Vertex into = -1;
    for (Vertex u : adj[v])
      if (into == -1 || adj[u].size() < adj[into].size()) into = u;
    for (Vertex u : adj[v]) {
      adj[u].erase(v);
      if (into != -1 && u != into) {
        adj[u].insert(into);
        adj[into].insert(u);
      }
    }
    adj[v].clear();
    alive[v] = 0;
  }
  return bound;
}

namespace {

using Mask = std::uint64_t;

class EliminationSearch {
 public:
  explicit EliminationSearch(const Graph& g) : n_(g.num_vertices()), nbr_(g.num_vertices(), 0) {
    all_ = n_ == 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex u : g.neighbors(v)) nbr_[v] |= Mask{1} << u;
  }

  /// Elimination order of width <= k, if one exists.
  std::optional<std::vector<Vertex>> decide(int k) {
    k_ = k;
    failed_.clear();
    order_.clear();
    if (search(0)) return order_;
    return std::nullopt;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Neighbors of v in the graph after eliminating S: vertices outside S
  // reachable from v through S.
  Mask eliminated_neighbors(Mask eliminated, Vertex v) const {
    Mask seen = Mask{1} << v;
    Mask frontier = nbr_[v];
    Mask out = 0;
    while (frontier) {
      const Mask u = frontier & -frontier;
      frontier &= ~u;
      if (seen & u) continue;
      seen |= u;
      if (eliminated & u) {
        frontier |= nbr_[std::countr_zero(u)] & ~seen;
      } else {
        out |= u;
      }
    }
    return out;
  }

  bool is_clique(Mask eliminated, Mask members) const {
    for (Mask r = members; r; r &= r - 1) {
      const Vertex u = static_cast<Vertex>(std::countr_zero(r));
      const Mask others = members & ~(Mask{1} << u);
      if ((eliminated_neighbors(eliminated, u) & others) != others) return false;
    }
    return true;
  }

  bool search(Mask eliminated) {
    const Mask remaining = all_ & ~eliminated;
    if (std::popcount(remaining) <= k_ + 1) {
      for (Mask r = remaining; r; r &= r - 1) order_.push_back(static_cast<Vertex>(std::countr_zero(r)));
      return true;
    }
    if (failed_.count(eliminated)) return false;
    ++nodes_;

    std::vector<Vertex> candidates;
    for (Mask r = remaining; r; r &= r - 1) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(r));
      const Mask nb = eliminated_neighbors(eliminated, v);
      if (std::popcount(nb) > k_) continue;
      if (is_clique(eliminated, nb)) {
        // A simplicial vertex of low degree can always be eliminated first.
        candidates.assign(1, v);
        break;
      }
      candidates.push_back(v);
    }
    for (Vertex v : candidates) {
      order_.push_back(v);
      if (search(eliminated | (Mask{1} << v))) return true;
      order_.pop_back();
    }
    failed_.insert(eliminated);
    return false;
  }

  Vertex n_;
  Mask all_ = 0;
  std::vector<Mask> nbr_;
  int k_ = 0;
  std::unordered_set<Mask> failed_;
  std::vector<Vertex> order_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

TreewidthResult exact_treewidth(const Graph& g, Vertex cap) {
  const Vertex n = g.num_vertices();
  if (n > std::min<Vertex>(cap, 64)) {
    throw CapExceeded("exact treewidth: " + std::to_string(n) + " vertices exceeds the cap of " + std::to_string(cap));
  }
  TreewidthResult result;
  auto upper_order = min_fill_order(g);
  auto upper = decomposition_from_elimination_order(g, upper_order);
  const int ub = upper.width();
  const int lb = treewidth_lower_bound(g);
  EliminationSearch search(g);
  for (int k = std::max(lb, 0); k < ub; ++k) {
    if (auto order = search.decide(k)) {
      result.decomposition = decomposition_from_elimination_order(g, *order);
      result.width = result.decomposition.width();
      result.nodes = search.nodes();
      return result;
    }
  }
  result.decomposition = std::move(upper);
  result.width = ub;
  result.nodes = search.nodes();
  return result;
}

}  // namespace lw
