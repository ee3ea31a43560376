#include "lw/theta_tools.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>

#include "lw/errors.hpp"

namespace lw {

namespace {

std::string pair_name(Vertex a, Vertex b) { return std::to_string(a) + "-" + std::to_string(b); }

// Checks that `p` is a simple walk along edges from `from` to `to`.
std::optional<std::string> check_walk(const Graph& g, const std::vector<Vertex>& p, Vertex from, Vertex to) {
  if (p.size() < 2 || p.front() != from || p.back() != to) return "path does not run between the ends";
  std::vector<Vertex> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return "path repeats a vertex";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!g.contains(p[i])) return "vertex " + std::to_string(p[i]) + " out of range";
    if (i > 0 && !g.has_edge(p[i - 1], p[i])) return "missing edge " + pair_name(p[i - 1], p[i]);
  }
  return std::nullopt;
}

// Interiors pairwise disjoint and anticomplete.
std::optional<std::string> check_interiors(const Graph& g, const std::vector<const std::vector<Vertex>*>& paths) {
  std::vector<int> owner(g.num_vertices(), -1);
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = *paths[i];
    for (std::size_t x = 1; x + 1 < p.size(); ++x) {
      if (owner[p[x]] != -1) return "vertex " + std::to_string(p[x]) + " is interior to two paths";
      owner[p[x]] = static_cast<int>(i);
    }
  }
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& p = *paths[i];
    for (std::size_t x = 1; x + 1 < p.size(); ++x)
      for (Vertex y : g.neighbors(p[x]))
        if (owner[y] != -1 && owner[y] != static_cast<int>(i)) {
          return "interiors of paths " + std::to_string(i) + " and " + std::to_string(owner[y]) + " meet at edge " +
                 pair_name(p[x], y);
        }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate_theta(const Graph& g, const ThetaCertificate& t) {
  if (!g.contains(t.a) || !g.contains(t.b) || t.a == t.b) return "ends must be distinct vertices";
  if (g.has_edge(t.a, t.b)) return "ends are adjacent";
  std::vector<const std::vector<Vertex>*> ptrs;
  int shortest = std::numeric_limits<int>::max();
  std::size_t edges = 0;
  VertexSet all;
  for (const auto& p : t.paths) {
    if (auto why = check_walk(g, p, t.a, t.b)) return why;
    if (p.size() < 3) return "a path has length below 2";
    shortest = std::min(shortest, static_cast<int>(p.size()) - 1);
    edges += p.size() - 1;
    all.insert(all.end(), p.begin(), p.end());
    ptrs.push_back(&p);
  }
  if (auto why = check_interiors(g, ptrs)) return why;
  auto sub = induced_subgraph(g, make_vertex_set(all));
  if (sub.graph.num_edges() != edges) return "the union has chords";
  if (shortest != t.length) {
    return "claimed length " + std::to_string(t.length) + ", recomputed " + std::to_string(shortest);
  }
  return std::nullopt;
}

std::optional<std::string> validate_path_family(const Graph& g, const PathFamily& family) {
  if (!g.contains(family.u) || !g.contains(family.v) || family.u == family.v) return "ends must be distinct vertices";
  std::vector<const std::vector<Vertex>*> ptrs;
  for (const auto& p : family.paths) {
    if (auto why = check_walk(g, p, family.u, family.v)) return why;
    if (!induces_path(g, make_vertex_set(p))) return "a path is not induced";
    ptrs.push_back(&p);
  }
  for (std::size_t i = 0; i < family.paths.size(); ++i)
    for (std::size_t j = i + 1; j < family.paths.size(); ++j)
      if (family.paths[i] == family.paths[j]) return "a path is listed twice";
  return check_interiors(g, ptrs);
}

namespace {

// Unit-capacity max flow on the vertex-split graph, for counting internally
// vertex-disjoint paths.
class DisjointPaths {
 public:
  explicit DisjointPaths(Vertex nodes) : head_(nodes, -1) {}

  void add_arc(Vertex from, Vertex to) {
    arcs_.push_back({to, head_[from], 1});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int run(Vertex s, Vertex t, int limit) {
    int flow = 0;
    std::vector<int> via(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), -1);
      std::vector<Vertex> queue{s};
      via[s] = -2;
      for (std::size_t i = 0; i < queue.size() && via[t] == -1; ++i) {
        for (int e = head_[queue[i]]; e != -1; e = arcs_[e].next) {
          if (arcs_[e].cap > 0 && via[arcs_[e].to] == -1) {
            via[arcs_[e].to] = e;
            queue.push_back(arcs_[e].to);
          }
        }
      }
      if (via[t] == -1) break;
      for (Vertex x = t; x != s; x = arcs_[via[x] ^ 1].to) {
        --arcs_[via[x]].cap;
        ++arcs_[via[x] ^ 1].cap;
      }
      ++flow;
    }
    return flow;
  }

 private:
  struct Arc {
    Vertex to;
    int next;
    int cap;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

// Depth-first packing of internally anticomplete induced u-v paths.
class PathPacker {
 public:
  PathPacker(const Graph& g, Vertex u, Vertex v, int min_length, int cap, std::uint64_t budget, std::uint64_t& nodes)
      : g_(g), u_(u), v_(v), min_length_(min_length), cap_(cap), budget_(budget), nodes_(nodes),
        blocked_(g.num_vertices(), 0), near_(g.num_vertices(), 0), on_path_(g.num_vertices(), 0),
        seen_(g.num_vertices(), 0) {}

  void run() {
    if (g_.has_edge(u_, v_)) {
      if (min_length_ <= 1) best_.push_back({u_, v_});
      return;
    }
    pack(-1);
  }

  const std::vector<std::vector<Vertex>>& best() const { return best_; }
  bool out_of_budget() const { return out_of_budget_; }

 private:
  bool stopped() const { return out_of_budget_ || static_cast<int>(best_.size()) >= cap_; }

  // Upper bound on how many more paths fit: internally disjoint u-v paths
  // through free vertices, with first vertices above `min_first`.
  int room(Vertex min_first, int needed) {
    const Vertex n = g_.num_vertices();
    DisjointPaths flow(2 * n);
    for (Vertex x = 0; x < n; ++x) {
      if (x == u_ || x == v_ || blocked_[x]) continue;
      flow.add_arc(2 * x, 2 * x + 1);
      for (Vertex y : g_.neighbors(x)) {
        if (y == u_) {
          if (x > min_first) flow.add_arc(2 * u_ + 1, 2 * x);
        } else if (y == v_) {
          flow.add_arc(2 * x + 1, 2 * v_);
        } else if (!blocked_[y]) {
          flow.add_arc(2 * x + 1, 2 * y);
        }
      }
    }
    return flow.run(2 * u_ + 1, 2 * v_, needed);
  }

  void pack(Vertex min_first) {
    if (stopped()) return;
    const int have = static_cast<int>(family_.size());
    const int needed = std::max(static_cast<int>(best_.size()) - have + 1, 1);
    if (room(min_first, needed) < needed) return;
    path_.assign(1, u_);
    mark(u_, +1);
    extend(min_first);
    mark(u_, -1);
    path_.clear();
  }

  void mark(Vertex x, int delta) {
    on_path_[x] += delta;
    near_[x] += delta;
    for (Vertex y : g_.neighbors(x)) near_[y] += delta;
  }

  void block(const std::vector<Vertex>& p, int delta) {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      blocked_[p[i]] += delta;
      for (Vertex y : g_.neighbors(p[i])) blocked_[y] += delta;
    }
  }

  // A necessary condition for completing the current path: v is reachable
  // from the tail through free vertices that see no earlier path vertex.
  bool can_finish(Vertex tail) {
    ++stamp_;
    std::vector<Vertex> queue{tail};
    seen_[tail] = stamp_;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex x = queue[i];
      for (Vertex y : g_.neighbors(x)) {
        if (y == v_) return true;
        if (seen_[y] == stamp_ || on_path_[y] || blocked_[y]) continue;
        const int allowed = x == tail ? 1 : 0;
        if (near_[y] != allowed) continue;
        seen_[y] = stamp_;
        queue.push_back(y);
      }
    }
    return false;
  }

  void complete() {
    std::vector<Vertex> p = path_;
    p.push_back(v_);
    for (Vertex x : path_) mark(x, -1);
    block(p, +1);
    family_.push_back(p);
    if (family_.size() > best_.size()) best_ = family_;
    const Vertex first = p[1];
    auto saved = std::move(path_);
    pack(first);
    path_ = std::move(saved);
    family_.pop_back();
    block(p, -1);
    for (Vertex x : path_) mark(x, +1);
  }

  void extend(Vertex min_first) {
    if (stopped()) return;
    if (++nodes_ > budget_) {
      out_of_budget_ = true;
      return;
    }
    const Vertex tail = path_.back();
    if (tail != u_ && g_.has_edge(tail, v_)) {
      // An induced path has to end here.
      if (static_cast<int>(path_.size()) >= min_length_) complete();
      return;
    }
    for (Vertex x : g_.neighbors(tail)) {
      if (x == v_ || on_path_[x] || blocked_[x] || near_[x] != 1) continue;
      if (tail == u_ && x <= min_first) continue;
      path_.push_back(x);
      mark(x, +1);
      if (can_finish(x)) extend(min_first);
      mark(x, -1);
      path_.pop_back();
      if (stopped()) return;
    }
  }

  const Graph& g_;
  Vertex u_, v_;
  int min_length_;
  int cap_;
  std::uint64_t budget_;
  std::uint64_t& nodes_;
  bool out_of_budget_ = false;
  std::vector<int> blocked_;
  std::vector<int> near_;
  std::vector<int> on_path_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t stamp_ = 0;
  std::vector<Vertex> path_;
  std::vector<std::vector<Vertex>> family_;
  std::vector<std::vector<Vertex>> best_;
};

}  // namespace

PathFamilyResult max_anticomplete_path_family(const Graph& g, Vertex u, Vertex v, int cap, std::uint64_t budget) {
  if (!g.contains(u) || !g.contains(v)) throw GraphError("path family ends out of range");
  if (u == v) throw PreconditionError("path family needs distinct ends");
  PathFamilyResult result;
  PathPacker packer(g, u, v, 1, cap, budget, result.nodes);
  packer.run();
  result.family = {u, v, packer.best()};
  result.exhaustive = !packer.out_of_budget();
  if (packer.out_of_budget()) {
    result.status = SearchStatus::budget_exceeded;
  } else {
    result.status = result.family.paths.empty() ? SearchStatus::none : SearchStatus::found;
  }
  return result;
}

ThetaSearchResult find_long_theta(const Graph& g, int min_length, std::uint64_t budget) {
  if (min_length < 2) throw PreconditionError("long theta needs min_length >= 2");
  ThetaSearchResult result;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    if (g.degree(a) < 3) continue;
    for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
      if (g.degree(b) < 3 || g.has_edge(a, b)) continue;
      PathPacker packer(g, a, b, min_length, 3, budget, result.nodes);
      packer.run();
      if (packer.best().size() >= 3) {
        ThetaCertificate t{a, b, {}, std::numeric_limits<int>::max()};
        for (int i = 0; i < 3; ++i) {
          t.paths[i] = packer.best()[i];
          t.length = std::min(t.length, static_cast<int>(t.paths[i].size()) - 1);
        }
        if (auto why = validate_theta(g, t)) throw std::logic_error("theta search produced an invalid certificate: " + *why);
        result.status = SearchStatus::found;
        result.theta = std::move(t);
        return result;
      }
      if (packer.out_of_budget()) {
        result.status = SearchStatus::budget_exceeded;
        return result;
      }
    }
  }
  result.status = SearchStatus::none;
  return result;
}

WideThetaResult find_wide_theta(const Graph& g, int width, std::uint64_t budget) {
  if (width < 2) throw PreconditionError("wide theta needs width >= 2");
  WideThetaResult result;
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    if (static_cast<int>(g.degree(a)) < width) continue;
    for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
      if (static_cast<int>(g.degree(b)) < width || g.has_edge(a, b)) continue;
      PathPacker packer(g, a, b, 2, width, budget, result.nodes);
      packer.run();
      if (static_cast<int>(packer.best().size()) >= width) {
        PathFamily f{a, b, packer.best()};
        if (auto why = validate_path_family(g, f)) throw std::logic_error("wide theta search produced " + *why);
        result.status = SearchStatus::found;
        result.theta = std::move(f);
        return result;
      }
      if (packer.out_of_budget()) {
        result.status = SearchStatus::budget_exceeded;
        return result;
      }
    }
  }
  result.status = SearchStatus::none;
  return result;
}

std::optional<CrossingWitness> crossing_witness(const Graph& t, std::span<const Vertex> order) {
  const Vertex n = t.num_vertices();
  if (static_cast<Vertex>(order.size()) != n) throw PreconditionError("order must list every vertex once");
  std::vector<int> rank(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!t.contains(order[i]) || rank[order[i]] != -1) throw PreconditionError("order must list every vertex once");
    rank[order[i]] = static_cast<int>(i);
  }
  // Edges oriented from lower to higher rank.
  std::vector<Edge> edges;
  for (auto [a, b] : t.edges()) edges.push_back(rank[a] < rank[b] ? Edge{a, b} : Edge{b, a});
  std::sort(edges.begin(), edges.end(), [&](const Edge& e, const Edge& f) {
    return std::pair{rank[e.first], rank[e.second]} < std::pair{rank[f.first], rank[f.second]};
  });
  for (const auto& [x1, x3] : edges) {
    for (const auto& [x2, x4] : edges) {
      if (!(rank[x1] < rank[x2] && rank[x2] < rank[x3] && rank[x3] < rank[x4])) continue;
      if (t.has_edge(x1, x2) || t.has_edge(x2, x3) || t.has_edge(x3, x4) || t.has_edge(x1, x4)) continue;
      return CrossingWitness{{x1, x2, x3, x4}};
    }
  }
  return std::nullopt;
}

std::optional<CrossingWitness> crossing_witness(const Graph& host, const ThetaCertificate& t,
                                                std::span<const Vertex> order) {
  if (auto why = validate_theta(host, t)) throw PreconditionError("not a theta: " + *why);
  if (t.length < 4) throw PreconditionError("crossing witness needs a theta of length >= 4");
  VertexSet members;
  for (const auto& p : t.paths) members.insert(members.end(), p.begin(), p.end());
  auto sub = induced_subgraph(host, make_vertex_set(members));
  std::vector<Vertex> local;
  local.reserve(order.size());
  for (Vertex v : order) {
    if (!host.contains(v) || sub.old_to_new[v] == -1) throw PreconditionError("order holds a vertex outside the theta");
    local.push_back(sub.old_to_new[v]);
  }
  auto w = crossing_witness(sub.graph, local);
  if (w) {
    for (auto& x : w->x) x = sub.new_to_old[x];
  }
  return w;
}

AllOrdersResult crossing_witness_all_orders(const Graph& t) {
  const Vertex n = t.num_vertices();
  if (n > 20) throw CapExceeded("all-orders check is limited to 20 vertices");
  std::vector<std::uint64_t> factorial(n + 1, 1);
  for (Vertex i = 1; i <= n; ++i) factorial[i] = factorial[i - 1] * static_cast<std::uint64_t>(i);
  std::vector<std::uint32_t> adj(n, 0);
  for (auto [a, b] : t.edges()) {
    adj[a] |= 1u << b;
    adj[b] |= 1u << a;
  }

  AllOrdersResult result;
  std::vector<int> rank(n, -1);
  std::vector<Vertex> prefix;
  // below[r]: the vertices at ranks < r.
  std::vector<std::uint32_t> below(n + 1, 0);

  // Does the newest vertex x (the largest rank) close a pattern as x4?
  auto closes_pattern = [&](Vertex x) {
    const int top = rank[x];
    const std::uint32_t far = ~adj[x];
    std::uint32_t seconds = adj[x] & below[top];
    while (seconds) {
      const Vertex x2 = static_cast<Vertex>(std::countr_zero(seconds));
      seconds &= seconds - 1;
      const std::uint32_t free = far & ~adj[x2];
      const std::uint32_t firsts = below[rank[x2]] & free;
      std::uint32_t thirds = below[top] & ~below[rank[x2] + 1] & free;
      while (firsts && thirds) {
        const Vertex x3 = static_cast<Vertex>(std::countr_zero(thirds));
        thirds &= thirds - 1;
        if (adj[x3] & firsts) return true;
      }
    }
    return false;
  };

  std::function<bool()> place = [&]() -> bool {
    for (Vertex x = 0; x < n; ++x) {
      if (rank[x] >= 0) continue;
      rank[x] = static_cast<int>(prefix.size());
      prefix.push_back(x);
      below[prefix.size()] = below[prefix.size() - 1] | (1u << x);
      ++result.prefixes;
      const Vertex left = n - static_cast<Vertex>(prefix.size());
      bool stop = false;
      if (closes_pattern(x)) {
        result.orders += factorial[left];
      } else if (left == 0) {
        result.counterexample = prefix;
        stop = true;
      } else {
        stop = place();
      }
      prefix.pop_back();
      rank[x] = -1;
      if (stop) return true;
    }
    return false;
  };
  if (n == 0) {
    result.counterexample = std::vector<Vertex>{};
  } else {
    place();
  }
  return result;
}

std::string_view to_string(ConnectorOutcome o) {
  switch (o) {
    case ConnectorOutcome::path_or_hole:
      return "path_or_hole";
    case ConnectorOutcome::tripod:
      return "tripod";
    case ConnectorOutcome::unclassified:
      return "unclassified";
  }
  return "unclassified";
}

namespace {

// T[F] connected and F meets N(v_i) for each i.
bool connects(const Graph& t, const std::vector<char>& in_f, const std::array<Vertex, 3>& ends) {
  for (Vertex e : ends) {
    bool touches = false;
    for (Vertex y : t.neighbors(e)) touches = touches || in_f[y];
    if (!touches) return false;
  }
  Vertex start = -1;
  Vertex size = 0;
  for (Vertex x = 0; x < t.num_vertices(); ++x)
    if (in_f[x]) {
      ++size;
      if (start == -1) start = x;
    }
  if (start == -1) return false;
  std::vector<char> seen(t.num_vertices(), 0);
  std::vector<Vertex> queue{start};
  seen[start] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Vertex y : t.neighbors(queue[i]))
      if (in_f[y] && !seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
  return static_cast<Vertex>(queue.size()) == size;
}

bool try_tripod(const Graph& t, const std::vector<char>& in_f, const VertexSet& f, const std::array<Vertex, 3>& ends,
                ConnectorResult& out) {
  const Vertex n = t.num_vertices();
  std::vector<char> is_end(n, 0);
  for (Vertex e : ends) is_end[e] = 1;
  for (Vertex a : f) {
    int degree = 0;
    for (Vertex y : t.neighbors(a)) degree += in_f[y] || is_end[y];
    if (degree < 3) continue;
    // Shortest paths from a inside T[F].
    std::vector<Vertex> parent(n, -1);
    std::vector<Vertex> queue{a};
    parent[a] = a;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex y : t.neighbors(queue[i]))
        if (in_f[y] && parent[y] == -1) {
          parent[y] = queue[i];
          queue.push_back(y);
        }
    std::array<std::vector<Vertex>, 3> options;
    for (int i = 0; i < 3; ++i)
      for (Vertex y : t.neighbors(ends[i]))
        if (in_f[y] && parent[y] != -1) options[i].push_back(y);
    for (Vertex y0 : options[0])
      for (Vertex y1 : options[1])
        for (Vertex y2 : options[2]) {
          std::array<Vertex, 3> ys{y0, y1, y2};
          std::array<std::vector<Vertex>, 3> legs;
          std::vector<int> leg_of(n, -1);
          bool ok = true;
          std::size_t covered = 1;
          for (int i = 0; i < 3 && ok; ++i) {
            std::vector<Vertex> back;
            for (Vertex x = ys[i]; x != a; x = parent[x]) back.push_back(x);
            legs[i].push_back(a);
            legs[i].insert(legs[i].end(), back.rbegin(), back.rend());
            legs[i].push_back(ends[i]);
            for (std::size_t p = 1; p < legs[i].size(); ++p) {
              if (leg_of[legs[i][p]] != -1) ok = false;
              leg_of[legs[i][p]] = i;
              if (p + 1 < legs[i].size()) ++covered;
            }
          }
          if (!ok || covered != f.size()) continue;
          for (int i = 0; i < 3 && ok; ++i)
            for (std::size_t p = 1; p < legs[i].size() && ok; ++p)
              for (Vertex y : t.neighbors(legs[i][p]))
                if (leg_of[y] != -1 && leg_of[y] != i && !(is_end[y] && is_end[legs[i][p]])) ok = false;
          if (!ok) continue;
          out.outcome = ConnectorOutcome::tripod;
          out.center = a;
          out.legs = std::move(legs);
          return true;
        }
  }
  return false;
}

bool try_path(const Graph& t, const std::vector<char>& in_f, const VertexSet& f, const std::array<Vertex, 3>& ends,
              ConnectorResult& out) {
  std::size_t edges = 0;
  Vertex end = -1;
  for (Vertex x : f) {
    int d = 0;
    for (Vertex y : t.neighbors(x)) d += in_f[y];
    if (d > 2) return false;
    edges += d;
    if (d <= 1 && end == -1) end = x;
  }
  if (edges / 2 + 1 != f.size() || end == -1) return false;
  std::vector<Vertex> line{end};
  Vertex prev = -1;
  while (line.size() < f.size()) {
    Vertex next = -1;
    for (Vertex y : t.neighbors(line.back()))
      if (in_f[y] && y != prev) next = y;
    prev = line.back();
    line.push_back(next);
  }
  static constexpr std::array<std::array<int, 3>, 3> kChoices{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  for (const auto& c : kChoices) {
    const Vertex vi = ends[c[0]];
    const Vertex vj = ends[c[1]];
    const Vertex vk = ends[c[2]];
    for (bool flip : {false, true}) {
      const Vertex first = flip ? line.back() : line.front();
      const Vertex last = flip ? line.front() : line.back();
      if (!t.has_edge(vi, first) || !t.has_edge(vj, last)) continue;
      std::vector<Vertex> seen;
      for (Vertex y : t.neighbors(vk))
        if (in_f[y]) seen.push_back(y);
      bool spread = false;
      for (std::size_t p = 0; p < seen.size() && !spread; ++p)
        for (std::size_t q = p + 1; q < seen.size() && !spread; ++q) spread = !t.has_edge(seen[p], seen[q]);
      if (!spread) continue;
      out.outcome = ConnectorOutcome::path_or_hole;
      out.ijk = c;
      out.path.assign(1, vi);
      if (flip) {
        out.path.insert(out.path.end(), line.rbegin(), line.rend());
      } else {
        out.path.insert(out.path.end(), line.begin(), line.end());
      }
      out.path.push_back(vj);
      out.hole = t.has_edge(vi, vj);
      return true;
    }
  }
  return false;
}

}  // namespace

ConnectorResult minimal_connector(const Graph& t, Vertex v1, Vertex v2, Vertex v3) {
  const std::array<Vertex, 3> ends{v1, v2, v3};
  for (Vertex e : ends)
    if (!t.contains(e)) throw PreconditionError("connector terminal out of range");
  if (v1 == v2 || v1 == v3 || v2 == v3) throw PreconditionError("connector terminals must be distinct");
  if (auto tri = find_triangle(t)) {
    throw PreconditionError("graph contains the triangle " + std::to_string((*tri)[0]) + ", " +
                            std::to_string((*tri)[1]) + ", " + std::to_string((*tri)[2]));
  }
  const Vertex n = t.num_vertices();
  std::vector<char> removed(n, 0);
  for (Vertex e : ends) removed[e] = 1;
  int count = 0;
  auto label = component_labels(t, removed, count);
  int chosen = -1;
  for (int c = 0; c < count && chosen == -1; ++c) {
    std::vector<char> in_c(n, 0);
    for (Vertex x = 0; x < n; ++x) in_c[x] = label[x] == c;
    if (connects(t, in_c, ends)) chosen = c;
  }
  if (chosen == -1) throw PreconditionError("no component of T - {v1, v2, v3} sees all three terminals");

  std::vector<char> in_f(n, 0);
  for (Vertex x = 0; x < n; ++x) in_f[x] = label[x] == chosen;

  // Leaves of T[F] that are not the last contact of a terminal can go first;
  // this keeps F connected and is linear, so the quadratic passes below only
  // see what is left.
  {
    std::vector<int> deg(n, 0);
    std::array<int, 3> contacts{0, 0, 0};
    Vertex size = 0;
    for (Vertex x = 0; x < n; ++x) {
      if (!in_f[x]) continue;
      ++size;
      for (Vertex y : t.neighbors(x)) deg[x] += in_f[y];
      for (int i = 0; i < 3; ++i) contacts[i] += t.has_edge(x, ends[i]);
    }
    std::vector<Vertex> queue;
    for (Vertex x = 0; x < n; ++x)
      if (in_f[x] && deg[x] == 1) queue.push_back(x);
    while (!queue.empty() && size > 1) {
      const Vertex x = queue.back();
      queue.pop_back();
      if (!in_f[x] || deg[x] != 1) continue;
      bool needed = false;
      for (int i = 0; i < 3; ++i) needed = needed || (t.has_edge(x, ends[i]) && contacts[i] == 1);
      if (needed) continue;
      in_f[x] = 0;
      --size;
      for (int i = 0; i < 3; ++i) contacts[i] -= t.has_edge(x, ends[i]);
      for (Vertex y : t.neighbors(x))
        if (in_f[y] && --deg[y] == 1) queue.push_back(y);
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex x = 0; x < n; ++x) {
      if (!in_f[x]) continue;
      in_f[x] = 0;
      if (connects(t, in_f, ends)) {
        changed = true;
      } else {
        in_f[x] = 1;
      }
    }
  }
  ConnectorResult out;
  for (Vertex x = 0; x < n; ++x)
    if (in_f[x]) out.f.push_back(x);
  out.minimal = true;
  for (Vertex x : out.f) {
    in_f[x] = 0;
    if (connects(t, in_f, ends)) out.minimal = false;
    in_f[x] = 1;
  }
  if (try_tripod(t, in_f, out.f, ends, out)) return out;
  if (try_path(t, in_f, out.f, ends, out)) return out;
  out.outcome = ConnectorOutcome::unclassified;
  out.detail = "minimal connector of " + std::to_string(out.f.size()) + " vertices fits neither outcome";
  return out;
}

std::string_view to_string(LongThetaOutcome::Kind k) {
  switch (k) {
    case LongThetaOutcome::Kind::degree_bound_holds:
      return "degree_bound_holds";
    case LongThetaOutcome::Kind::theta:
      return "theta";
    case LongThetaOutcome::Kind::falsified:
      return "falsified";
  }
  return "falsified";
}

LongThetaOutcome extract_long_theta_from_pipeline(const SeparatorPipelineState& st) {
  LongThetaOutcome out;
  auto falsified = [&](std::string why) {
    out.kind = LongThetaOutcome::Kind::falsified;
    out.detail = std::move(why);
    return out;
  };
  if (!st.k_prime_found) return falsified("H' has no balanced separator of size at most 3");
  const Graph& hd = st.h_dprime;
  out.max_degree = static_cast<int>(hd.max_degree());
  if (out.max_degree < 9) {
    out.kind = LongThetaOutcome::Kind::degree_bound_holds;
    return out;
  }
  Vertex d = -1;
  for (Vertex x = st.n_side; x < hd.num_vertices() && d == -1; ++x)
    if (hd.degree(x) >= 9) d = x;
  if (d == -1) return falsified("a vertex of the N side has degree >= 9");

  std::array<Vertex, 3> ns{-1, -1, -1};
  for (Vertex b : st.y_big_high) {
    std::vector<Vertex> hits;
    for (Vertex y : hd.neighbors(d))
      if (y < st.n_side && st.h.has_edge(b, st.h_dprime_sets[y][0])) hits.push_back(st.h_dprime_sets[y][0]);
    if (hits.size() >= 3) {
      out.big = b;
      ns = {hits[0], hits[1], hits[2]};
      break;
    }
  }
  if (out.big == -1) return falsified("no big vertex has three medium neighbors next to the high-degree D");
  out.terminals = ns;

  VertexSet members = st.h_dprime_sets[d];
  members.insert(members.end(), ns.begin(), ns.end());
  auto sub = induced_subgraph(st.h, make_vertex_set(members));
  ConnectorResult conn;
  try {
    conn = minimal_connector(sub.graph, sub.old_to_new[ns[0]], sub.old_to_new[ns[1]], sub.old_to_new[ns[2]]);
  } catch (const PreconditionError& e) {
    return falsified(std::string("connector precondition: ") + e.what());
  }
  if (conn.outcome == ConnectorOutcome::path_or_hole) {
    return falsified("the connector is a path between two medium neighbors, which needs a degree-3 vertex with two "
                     "neighbors of degree >= 3");
  }
  if (conn.outcome == ConnectorOutcome::unclassified) return falsified(conn.detail);

  ThetaCertificate theta;
  theta.a = sub.new_to_old[conn.center];
  theta.b = out.big;
  theta.length = std::numeric_limits<int>::max();
  for (int i = 0; i < 3; ++i) {
    for (Vertex x : conn.legs[i]) theta.paths[i].push_back(sub.new_to_old[x]);
    theta.paths[i].push_back(out.big);
    theta.length = std::min(theta.length, static_cast<int>(theta.paths[i].size()) - 1);
  }
  if (auto why = validate_theta(st.h, theta)) return falsified("extracted theta is invalid: " + *why);
  out.kind = LongThetaOutcome::Kind::theta;
  out.theta = std::move(theta);
  return out;
}

}  // namespace lw
