#include "lw/separators.hpp"

#include <algorithm>
#include <stdexcept>

#include "lw/errors.hpp"
#include "lw/minor_models.hpp"

namespace lw {

namespace {

struct ComponentWeights {
  std::vector<int> label;
  std::vector<std::uint64_t> weight;
};

ComponentWeights weigh_components(const Graph& g, const WeightFunction& w, const std::vector<char>& removed) {
  ComponentWeights out;
  int count = 0;
  out.label = component_labels(g, removed, count);
  out.weight.assign(count, 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (out.label[v] >= 0) out.weight[out.label[v]] += w.num[v];
  return out;
}

std::vector<char> removal_mask(Vertex n, const VertexSet& x) {
  std::vector<char> removed(n, 0);
  for (Vertex v : x) {
    if (v < 0 || v >= n) throw GraphError("separator vertex " + std::to_string(v) + " out of range");
    removed[v] = 1;
  }
  return removed;
}

void require_weights(const Graph& g, const WeightFunction& w) {
  if (w.size() != g.num_vertices()) throw PreconditionError("weight function does not match the graph");
  if (w.den == 0) throw PreconditionError("weight denominator is zero");
}

// Smallest vertex c of the component `comp` with c > floor whose removal
// leaves only pieces of weight at most 1/2, by one articulation-point DFS.
Vertex best_cut_vertex(const Graph& g, const WeightFunction& w, const std::vector<char>& removed,
                       const std::vector<int>& label, int comp, std::uint64_t comp_weight, Vertex floor) {
  const Vertex n = g.num_vertices();
  Vertex root = -1;
  for (Vertex v = 0; v < n && root == -1; ++v)
    if (label[v] == comp) root = v;

  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<std::uint64_t> subtree(n, 0), separated(n, 0), max_piece(n, 0);
  std::vector<std::size_t> next(n, 0);
  std::vector<Vertex> stack{root};
  int clock = 0;
  disc[root] = low[root] = clock++;
  subtree[root] = w.num[root];
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto nb = g.neighbors(v);
    if (next[v] < nb.size()) {
      const Vertex u = nb[next[v]++];
      if (removed[u]) continue;
      if (disc[u] == -1) {
        parent[u] = v;
        disc[u] = low[u] = clock++;
        subtree[u] = w.num[u];
        stack.push_back(u);
      } else if (u != parent[v]) {
        low[v] = std::min(low[v], disc[u]);
      }
      continue;
    }
    stack.pop_back();
    const Vertex p = parent[v];
    if (p == -1) continue;
    low[p] = std::min(low[p], low[v]);
    subtree[p] += subtree[v];
    if (low[v] >= disc[p]) {
      separated[p] += subtree[v];
      max_piece[p] = std::max(max_piece[p], subtree[v]);
    }
  }
  for (Vertex c = floor + 1; c < n; ++c) {
    if (label[c] != comp) continue;
    const std::uint64_t rest = comp_weight - w.num[c] - separated[c];
    if (w.at_most_half(std::max(rest, max_piece[c]))) return c;
  }
  return -1;
}

}  // namespace

std::uint64_t heaviest_component(const Graph& g, const WeightFunction& w, const VertexSet& x) {
  require_weights(g, w);
  auto cw = weigh_components(g, w, removal_mask(g.num_vertices(), x));
  std::uint64_t best = 0;
  for (auto s : cw.weight) best = std::max(best, s);
  return best;
}

bool is_balanced_separator(const Graph& g, const WeightFunction& w, const VertexSet& x) {
  return w.at_most_half(heaviest_component(g, w, x));
}

std::optional<VertexSet> min_balanced_separator(const Graph& g, const WeightFunction& w, int max_size) {
  require_weights(g, w);
  const Vertex n = g.num_vertices();
  if (is_balanced_separator(g, w, {})) return VertexSet{};
  for (int size = 1; size <= std::min<int>(max_size, n); ++size) {
    // Lexicographic walk over prefixes of size - 1.
    std::vector<Vertex> prefix(size - 1);
    for (int i = 0; i < size - 1; ++i) prefix[i] = i;
    while (true) {
      const Vertex floor = prefix.empty() ? -1 : prefix.back();
      if (floor + 1 < n) {
        auto removed = removal_mask(n, prefix);
        auto cw = weigh_components(g, w, removed);
        int heavy = -1;
        for (int c = 0; c < static_cast<int>(cw.weight.size()); ++c)
          if (!w.at_most_half(cw.weight[c])) heavy = c;
        Vertex last = -1;
        if (heavy == -1) {
          last = floor + 1;
        } else {
          last = best_cut_vertex(g, w, removed, cw.label, heavy, cw.weight[heavy], floor);
        }
        if (last != -1) {
          VertexSet out = prefix;
          out.push_back(last);
          return out;
        }
      }
      // Advance to the next prefix that still leaves room for a last vertex.
      int i = size - 2;
      while (i >= 0 && prefix[i] >= n - 1 - (size - 1 - i)) --i;
      if (i < 0) break;
      ++prefix[i];
      for (int j = i + 1; j < size - 1; ++j) prefix[j] = prefix[j - 1] + 1;
    }
  }
  return std::nullopt;
}

VertexSet separator_from_decomposition(const Graph& g, const WeightFunction& w, const TreeDecomposition& td) {
  require_weights(g, w);
  if (auto why = validate(g, td)) throw PreconditionError("invalid tree decomposition: " + *why);
  if (!w.weak()) throw PreconditionError("weights total more than 1");
  const Vertex n = g.num_vertices();
  const Vertex nodes = td.tree.num_vertices();
  std::vector<Vertex> home(n, -1);
  for (Vertex t = 0; t < nodes; ++t)
    for (Vertex v : td.bags[t])
      if (home[v] == -1) home[v] = t;

  Vertex t = 0;
  for (Vertex step = 0; step <= nodes; ++step) {
    const auto& bag = td.bags[t];
    auto cw = weigh_components(g, w, removal_mask(n, bag));
    int heavy = -1;
    for (int c = 0; c < static_cast<int>(cw.weight.size()); ++c)
      if (!w.at_most_half(cw.weight[c])) heavy = c;
    if (heavy == -1) return bag;

    Vertex target = -1;
    for (Vertex v = 0; v < n && target == -1; ++v)
      if (cw.label[v] == heavy) target = home[v];
    // The heavy component misses the bag, so it lives behind one tree edge at t.
    std::vector<Vertex> parent(nodes, -1);
    std::vector<Vertex> queue{t};
    parent[t] = t;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex u : td.tree.neighbors(queue[i]))
        if (parent[u] == -1) {
          parent[u] = queue[i];
          queue.push_back(u);
        }
    Vertex step_to = target;
    while (parent[step_to] != t) step_to = parent[step_to];
    t = step_to;
  }
  throw std::logic_error("separator walk did not terminate");
}

SeparatorPipelineState build_pipeline(const Graph& h, const std::vector<VertexClass>& classes,
                                      const WeightFunction& w, Vertex exact_cap) {
  require_weights(h, w);
  if (!w.proper()) throw PreconditionError("pipeline needs a weight function of total exactly 1");
  SeparatorPipelineState st;
  st.h = h;
  st.classes = classes;
  st.w = w;
  st.h_prime = contract_to_h_prime(h, classes);
  st.w_prime = aggregate(w, st.h_prime.branch_map);
  const Graph& hp = st.h_prime.h_prime;

  auto kp = min_balanced_separator(hp, st.w_prime, 3);
  if (!kp) return st;
  st.k_prime_found = true;
  st.k_prime = *kp;
  for (Vertex x : st.k_prime) {
    switch (st.h_prime.kind[x]) {
      case VertexClass::big: {
        const Vertex b = st.h_prime.big_of[x];
        if (h.degree(b) > 3) {
          st.k_prime_big_high.push_back(x);
          st.y_big_high.push_back(b);
        } else {
          st.k_prime_big_low.push_back(x);
          st.y_big_low.push_back(b);
        }
        break;
      }
      case VertexClass::medium:
        st.k_prime_medium.push_back(x);
        break;
      case VertexClass::small:
        st.k_prime_small.push_back(x);
        break;
    }
  }
  normalize(st.y_big_high);
  normalize(st.y_big_low);

  std::vector<VertexSet> sets;
  for (Vertex x : st.k_prime_big_high)
    for (Vertex v : st.h_prime.branch_map[x])
      if (v != st.h_prime.big_of[x]) sets.push_back({v});
  std::sort(sets.begin(), sets.end());
  st.n_side = static_cast<int>(sets.size());
  {
    std::vector<char> removed(hp.num_vertices(), 0);
    for (Vertex x : st.k_prime) removed[x] = 1;
    int count = 0;
    auto label = component_labels(hp, removed, count);
    std::vector<VertexSet> expanded(count);
    for (Vertex x = 0; x < hp.num_vertices(); ++x)
      if (label[x] >= 0)
        for (Vertex v : st.h_prime.branch_map[x]) expanded[label[x]].push_back(v);
    for (auto& d : expanded) sets.push_back(make_vertex_set(std::move(d)));
  }
  auto model = contract_model(h, sets);
  st.h_dprime = std::move(model.graph);
  st.h_dprime_sets = std::move(model.branch_sets);
  st.w_dprime = aggregate(w, st.h_dprime_sets);
  st.h_dprime_bipartite = true;
  for (auto [a, b] : st.h_dprime.edges())
    if ((a < st.n_side) == (b < st.n_side)) st.h_dprime_bipartite = false;

  if (st.h_dprime.num_vertices() <= exact_cap) {
    auto tw = exact_treewidth(st.h_dprime, exact_cap);
    st.td_dprime = std::move(tw.decomposition);
    st.td_exact = tw.exact;
  } else {
    st.td_dprime = min_fill_decomposition(st.h_dprime);
    st.td_exact = false;
  }
  st.td_width = st.td_dprime.width();

  if (!is_balanced_separator(st.h_dprime, st.w_dprime, {})) {
    st.k_dprime = separator_from_decomposition(st.h_dprime, st.w_dprime, st.td_dprime);
  }
  for (Vertex x : st.k_dprime) {
    if (x < st.n_side) {
      st.sep_dprime.push_back(x);
    } else {
      for (Vertex y : st.h_dprime.neighbors(x)) st.sep_dprime.push_back(y);
    }
  }
  normalize(st.sep_dprime);

  VertexSet k;
  for (const auto* part : {&st.k_prime_small, &st.k_prime_medium, &st.k_prime_big_low})
    for (Vertex x : *part) k.insert(k.end(), st.h_prime.branch_map[x].begin(), st.h_prime.branch_map[x].end());
  for (Vertex x : st.sep_dprime) k.insert(k.end(), st.h_dprime_sets[x].begin(), st.h_dprime_sets[x].end());
  k.insert(k.end(), st.y_big_high.begin(), st.y_big_high.end());
  st.k = make_vertex_set(std::move(k));
  return st;
}

bool SeparatorReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

SeparatorReport verify_H_separator_bound(const SeparatorPipelineState& st) {
  SeparatorReport report;
  if (!st.k_prime_found) {
    report.checks.push_back({"k_prime_exists", "H' has a balanced separator of size at most 3", false,
                             "no balanced separator of size <= 3 in H' (" +
                                 std::to_string(st.h_prime.h_prime.num_vertices()) + " vertices)"});
    return report;
  }
  const std::string width_note = st.td_exact ? "exact width " : "heuristic width ";
  const std::int64_t slots = st.td_width + 1;
  {
    BoundCheck c{"h_dprime_bipartite", "H'' is bipartite with sides N and D"};
    c.passed = st.h_dprime_bipartite;
    if (!c.passed) c.detail = "an edge of H'' joins two vertices of one side";
    report.checks.push_back(std::move(c));
  }
  {
    BoundCheck c{"k_balanced", "K is a w-balanced separator of H"};
    c.passed = is_balanced_separator(st.h, st.w, st.k);
    if (!c.passed) {
      c.detail = "a component of H - K weighs " + format_fraction(heaviest_component(st.h, st.w, st.k), st.w.den);
    }
    report.checks.push_back(std::move(c));
  }
  {
    BoundCheck c{"k_size", "|K| <= 21 + 9 (width(H'') + 1)"};
    const std::int64_t bound = 21 + 9 * slots;
    c.passed = static_cast<std::int64_t>(st.k.size()) <= bound;
    c.detail = "|K| = " + std::to_string(st.k.size()) + ", bound " + std::to_string(bound) + " from " + width_note +
               std::to_string(st.td_width);
    report.checks.push_back(std::move(c));
  }
  {
    BoundCheck c{"h_dprime_separator", "K''_N + N(K''_D) is w''-balanced in H'' and has at most 9 (width + 1) vertices"};
    const bool balanced = is_balanced_separator(st.h_dprime, st.w_dprime, st.sep_dprime);
    const bool small = static_cast<std::int64_t>(st.sep_dprime.size()) <= 9 * slots;
    c.passed = balanced && small;
    c.detail = "size " + std::to_string(st.sep_dprime.size()) + ", bound " + std::to_string(9 * slots) +
               (balanced ? "" : ", not balanced");
    report.checks.push_back(std::move(c));
  }
  return report;
}

SeparatorReport verify_h_prime_properties(const HPrimeResult& hp, int g) {
  SeparatorReport report;
  const Graph& graph = hp.h_prime;
  {
    BoundCheck c{"h_prime_degrees", "lone medium and small vertices of H' have degree at most 2"};
    for (Vertex x = 0; x < graph.num_vertices() && c.passed; ++x) {
      if (hp.kind[x] != VertexClass::big && graph.degree(x) > 2) {
        c.passed = false;
        c.detail = "H' vertex " + std::to_string(x) + " (H vertex " + std::to_string(hp.branch_map[x][0]) +
                   ") has degree " + std::to_string(graph.degree(x));
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    BoundCheck c{"h_prime_big_distance", "distinct big sets of H' are at distance >= 2^g / 3 - 2"};
    const std::int64_t target = std::int64_t{1} << g;
    int closest = -1;
    for (Vertex x = 0; x < graph.num_vertices() && c.passed; ++x) {
      if (hp.kind[x] != VertexClass::big) continue;
      auto dist = bfs_distances(graph, x);
      for (Vertex y = x + 1; y < graph.num_vertices(); ++y) {
        if (hp.kind[y] != VertexClass::big || dist[y] == kUnreachable) continue;
        if (closest < 0 || dist[y] < closest) closest = dist[y];
        if (3 * (static_cast<std::int64_t>(dist[y]) + 2) < target) {
          c.passed = false;
          c.detail = "big sets of " + std::to_string(hp.big_of[x]) + " and " + std::to_string(hp.big_of[y]) +
                     " at distance " + std::to_string(dist[y]);
          break;
        }
      }
    }
    if (c.passed) c.detail = closest < 0 ? "no connected pair" : "closest pair at distance " + std::to_string(closest);
    report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace lw
