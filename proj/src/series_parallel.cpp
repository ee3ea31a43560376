#include "lw/series_parallel.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "lw/errors.hpp"
#include "lw/minor_models.hpp"

namespace lw {

std::string_view to_string(ReductionStep::Kind k) {
  switch (k) {
    case ReductionStep::Kind::remove_isolated:
      return "remove_isolated";
    case ReductionStep::Kind::remove_leaf:
      return "remove_leaf";
    case ReductionStep::Kind::suppress:
      return "suppress";
  }
  return "suppress";
}

SeriesParallelResult is_series_parallel(const Graph& g) {
  const Vertex n = g.num_vertices();
  // Neighbor sets of the working multigraph; parallel edges collapse on insert.
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) adj[v].insert(g.neighbors(v).begin(), g.neighbors(v).end());
  std::vector<char> alive(n, 1);
  std::vector<char> queued(n, 0);
  std::deque<Vertex> work;
  auto push = [&](Vertex v) {
    if (alive[v] && !queued[v] && adj[v].size() <= 2) {
      queued[v] = 1;
      work.push_back(v);
    }
  };
  for (Vertex v = 0; v < n; ++v) push(v);

  SeriesParallelResult result;
  while (!work.empty()) {
    const Vertex v = work.front();
    work.pop_front();
    queued[v] = 0;
    if (!alive[v] || adj[v].size() > 2) continue;
    alive[v] = 0;
    std::vector<Vertex> nb(adj[v].begin(), adj[v].end());
    for (Vertex u : nb) adj[u].erase(v);
    adj[v].clear();
    if (nb.empty()) {
      result.trace.push_back({ReductionStep::Kind::remove_isolated, v});
    } else if (nb.size() == 1) {
      result.trace.push_back({ReductionStep::Kind::remove_leaf, v, nb[0]});
    } else {
      result.trace.push_back({ReductionStep::Kind::suppress, v, nb[0], nb[1]});
      adj[nb[0]].insert(nb[1]);
      adj[nb[1]].insert(nb[0]);
    }
    for (Vertex u : nb) push(u);
  }

  for (Vertex v = 0; v < n; ++v)
    if (alive[v]) result.core_vertices.push_back(v);
  result.series_parallel = result.core_vertices.empty();
  if (!result.series_parallel) {
    std::vector<Vertex> index(n, -1);
    for (std::size_t i = 0; i < result.core_vertices.size(); ++i) index[result.core_vertices[i]] = static_cast<Vertex>(i);
    std::vector<Edge> edges;
    for (Vertex v : result.core_vertices)
      for (Vertex u : adj[v])
        if (v < u) edges.emplace_back(index[v], index[u]);
    result.core = Graph::from_edges(static_cast<Vertex>(result.core_vertices.size()), edges);
  }
  return result;
}

bool is_two_terminal_series_parallel(const TwoTerminalGraph& g) {
  auto edges = g.graph.edges();
  if (g.source != g.sink) edges.emplace_back(g.source, g.sink);
  return is_series_parallel(Graph::from_edges(g.graph.num_vertices(), edges)).series_parallel;
}

HPrimeResult contract_to_h_prime(const Graph& h, const std::vector<VertexClass>& class_of) {
  if (static_cast<Vertex>(class_of.size()) != h.num_vertices()) {
    throw PreconditionError("classification has " + std::to_string(class_of.size()) + " entries for " +
                            std::to_string(h.num_vertices()) + " vertices");
  }
  std::vector<VertexSet> sets;
  std::vector<VertexClass> kind;
  std::vector<Vertex> big_of;
  for (Vertex b = 0; b < h.num_vertices(); ++b) {
    if (class_of[b] != VertexClass::big) continue;
    VertexSet s{b};
    for (Vertex u : h.neighbors(b))
      if (class_of[u] == VertexClass::medium) s.push_back(u);
    sets.push_back(make_vertex_set(std::move(s)));
    kind.push_back(VertexClass::big);
    big_of.push_back(b);
  }
  auto model = contract_model(h, sets, true);
  for (std::size_t i = sets.size(); i < model.branch_sets.size(); ++i) {
    kind.push_back(class_of[model.branch_sets[i][0]]);
    big_of.push_back(-1);
  }
  return {std::move(model.graph), std::move(model.branch_sets), std::move(kind), std::move(big_of),
          std::move(model.owner)};
}

namespace {

std::string vname(Vertex v) { return "vertex " + std::to_string(v); }

}  // namespace

CFResult c_of_F(const TwoTerminalGraph& f, const std::vector<std::vector<Vertex>>& paths) {
  const Graph& g = f.graph;
  const Vertex n = g.num_vertices();
  const Vertex s = f.source;
  const Vertex t = f.sink;
  if (!g.contains(s) || !g.contains(t) || s == t) throw HypothesisError("i", "terminals must be distinct valid vertices");
  const int k = static_cast<int>(paths.size());
  if (k == 0) throw HypothesisError("i", "no paths given");

  // (i): s-t paths, interiors pairwise disjoint, covering V(F).
  std::vector<int> path_of(n, -1);
  std::vector<int> position(n, -1);
  std::vector<char> covered(n, 0);
  for (int i = 0; i < k; ++i) {
    const auto& p = paths[i];
    if (p.size() < 2 || p.front() != s || p.back() != t) {
      throw HypothesisError("i", "path " + std::to_string(i) + " does not run from source to sink");
    }
    std::vector<char> seen(n, 0);
    for (std::size_t x = 0; x < p.size(); ++x) {
      const Vertex v = p[x];
      if (!g.contains(v)) throw HypothesisError("i", vname(v) + " out of range");
      if (seen[v]) throw HypothesisError("i", vname(v) + " repeats on path " + std::to_string(i));
      seen[v] = 1;
      if (x > 0 && !g.has_edge(p[x - 1], v)) {
        throw HypothesisError("i", "path " + std::to_string(i) + " misses the edge " + std::to_string(p[x - 1]) + "-" +
                                       std::to_string(v));
      }
      covered[v] = 1;
      if (v == s || v == t) continue;
      if (path_of[v] != -1) {
        throw HypothesisError("i", vname(v) + " is interior to paths " + std::to_string(path_of[v]) + " and " +
                                       std::to_string(i));
      }
      path_of[v] = i;
      position[v] = static_cast<int>(x);
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (!covered[v]) throw HypothesisError("i", vname(v) + " lies on no path");

  // (ii): each interior vertex is in S', B' or the lower case.
  CFResult out;
  std::vector<VertexSet> n_prime(n);
  for (Vertex v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    const int i = path_of[v];
    std::vector<Vertex> outside;
    for (Vertex u : g.neighbors(v)) {
      if (u == s || u == t) {
        // Terminals lie on every path; they only count as outside when not
        // adjacent to v along P_i.
        const auto& p = paths[i];
        const bool along = (position[v] == 1 && u == s) || (position[v] + 2 == static_cast<int>(p.size()) && u == t);
        if (!along) outside.push_back(u);
      } else if (path_of[u] != i) {
        outside.push_back(u);
      }
    }
    if (outside.empty()) {
      out.s_prime.push_back(v);
      continue;
    }
    bool terminal_outside = false;
    std::vector<int> hits(k, 0);
    for (Vertex u : outside) {
      if (u == s || u == t) {
        terminal_outside = true;
      } else {
        ++hits[path_of[u]];
      }
    }
    bool big_case = !terminal_outside && i < k - 1;
    for (int j = 0; j < k && big_case; ++j) big_case = (j <= i) ? hits[j] == 0 : hits[j] == 1;
    bool lower_case = !terminal_outside && i > 0 && outside.size() == 1 && path_of[outside[0]] < i;
    if (big_case) {
      out.b_prime.push_back(v);
      VertexSet np(outside.begin(), outside.end());
      np.push_back(v);
      n_prime[v] = make_vertex_set(std::move(np));
    } else if (lower_case) {
      out.lower.push_back(v);
    } else {
      throw HypothesisError("ii", vname(v) + " on path " + std::to_string(i) + " fits none of the three cases");
    }
  }

  // (iii): B' vertices on one path keep their order on every later path.
  for (int i = 0; i + 1 < k; ++i) {
    std::vector<Vertex> on_path;
    for (Vertex v : paths[i])
      if (v != s && v != t && !n_prime[v].empty()) on_path.push_back(v);
    for (int j = i + 1; j < k; ++j) {
      int last = -1;
      Vertex last_v = -1;
      for (Vertex v : on_path) {
        Vertex u = -1;
        for (Vertex x : n_prime[v])
          if (x != v && path_of[x] == j) u = x;
        if (position[u] <= last) {
          throw HypothesisError("iii", "vertices " + std::to_string(last_v) + " and " + std::to_string(v) + " of path " +
                                           std::to_string(i) + " cross on path " + std::to_string(j));
        }
        last = position[u];
        last_v = v;
      }
    }
  }

  std::vector<VertexSet> sets;
  for (Vertex v : out.b_prime) sets.push_back(n_prime[v]);
  for (Vertex v : out.s_prime) sets.push_back({v});
  sets.push_back({s});
  sets.push_back({t});
  ContractedModel model;
  try {
    model = contract_model(g, sets, false);
  } catch (const ModelError& e) {
    throw HypothesisError("ii", e.what());
  }
  for (Vertex v = 0; v < n; ++v)
    if (model.owner[v] == -1) throw HypothesisError("ii", vname(v) + " lies in no contracted set");

  out.contracted = {std::move(model.graph), model.owner[s], model.owner[t]};
  out.branch_sets = std::move(model.branch_sets);
  out.series_parallel = is_two_terminal_series_parallel(out.contracted);
  return out;
}

TerminalInstance terminal_instance(const LayeredWheel& wheel, const VertexSet& removed) {
  const Graph& g = wheel.graph();
  const Vertex n = g.num_vertices();
  std::vector<char> gone(n, 0);
  for (Vertex v : removed) {
    if (!g.contains(v)) throw GraphError(vname(v) + " out of range");
    gone[v] = 1;
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    const auto cu = wheel.vertex_class(u);
    const auto cv = wheel.vertex_class(v);
    const bool cut = (cu == VertexClass::big && cv == VertexClass::medium && gone[u]) ||
                     (cv == VertexClass::big && cu == VertexClass::medium && gone[v]);
    if (!cut) edges.emplace_back(u, v);
  }
  const Vertex s = n;
  const Vertex t = n + 1;
  const auto& p = wheel.params();
  TerminalInstance out;
  for (int layer = 1; layer <= p.k; ++layer) {
    edges.emplace_back(s, wheel.id(layer, 0));
    edges.emplace_back(wheel.id(layer, p.path_length()), t);
    std::vector<Vertex> path{s};
    auto body = wheel.layer_path(layer);
    path.insert(path.end(), body.begin(), body.end());
    path.push_back(t);
    out.paths.push_back(std::move(path));
  }
  out.f = {Graph::from_edges(n + 2, edges), s, t};
  return out;
}

}  // namespace lw
