#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lw/errors.hpp"
#include "lw/generators.hpp"
#include "lw/series_parallel.hpp"
#include "oracles.hpp"

using namespace lw;

namespace {

// H' computed by union-find over the big-medium edges of H.
struct Contraction {
  Graph graph;
  std::vector<VertexSet> sets;
};

Contraction contract_big_medium(const Graph& h, const std::vector<VertexClass>& cls) {
  const Vertex n = h.num_vertices();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (auto [u, v] : h.edges()) {
    const bool bm = (cls[u] == VertexClass::big && cls[v] == VertexClass::medium) ||
                    (cls[v] == VertexClass::big && cls[u] == VertexClass::medium);
    if (bm) parent[find(u)] = find(v);
  }
  std::vector<VertexSet> groups(n);
  for (Vertex v = 0; v < n; ++v) groups[find(v)].push_back(v);
  std::vector<VertexSet> bigs, rest;
  for (auto& gr : groups) {
    if (gr.empty()) continue;
    const bool has_big = std::any_of(gr.begin(), gr.end(), [&](Vertex v) { return cls[v] == VertexClass::big; });
    (has_big ? bigs : rest).push_back(gr);
  }
  auto big_of = [&](const VertexSet& s) {
    return *std::find_if(s.begin(), s.end(), [&](Vertex v) { return cls[v] == VertexClass::big; });
  };
  std::sort(bigs.begin(), bigs.end(), [&](const VertexSet& a, const VertexSet& b) { return big_of(a) < big_of(b); });
  std::sort(rest.begin(), rest.end());
  std::vector<VertexSet> sets = bigs;
  sets.insert(sets.end(), rest.begin(), rest.end());
  std::vector<Vertex> owner(n);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (Vertex v : sets[i]) owner[v] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (auto [u, v] : h.edges())
    if (owner[u] != owner[v]) edges.emplace_back(owner[u], owner[v]);
  return {Graph::from_edges(static_cast<Vertex>(sets.size()), edges), sets};
}

TwoTerminalGraph two_paths(std::vector<Edge> extra) {
  // s = 0, t = 1, paths 0-2-3-1 and 0-4-5-1
  std::vector<Edge> e{{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1}};
  e.insert(e.end(), extra.begin(), extra.end());
  return {Graph::from_edges(6, e), 0, 1};
}

const std::vector<std::vector<Vertex>> kTwoPaths{{0, 2, 3, 1}, {0, 4, 5, 1}};

}  // namespace

TEST_SUITE("series_parallel") {
  TEST_CASE("recognizer on small graphs") {
    auto c4 = is_series_parallel(gen::cycle(4));
    CHECK(c4.series_parallel);
    CHECK(c4.trace.size() == 4);
    auto k4 = is_series_parallel(gen::complete(4));
    CHECK_FALSE(k4.series_parallel);
    CHECK(k4.core == gen::complete(4));
    CHECK(k4.core_vertices == VertexSet{0, 1, 2, 3});
    CHECK(is_series_parallel(gen::theta({2, 2, 2})).series_parallel);
    CHECK(is_series_parallel(Graph::from_edges(0, {})).series_parallel);
    CHECK_FALSE(is_series_parallel(gen::wall(3)).series_parallel);
    CHECK_FALSE(is_series_parallel(gen::complete_bipartite(3, 3)).series_parallel);
    CHECK(is_series_parallel(gen::complete_bipartite(2, 5)).series_parallel);
  }

  TEST_CASE("a non-series-parallel core has minimum degree three") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 50; ++i) {
      auto g = gen::random_gnp(10, 0.3, rng);
      auto r = is_series_parallel(g);
      CHECK(r.series_parallel == !oracle::has_k4_minor(g));
      if (!r.series_parallel) {
        for (Vertex v = 0; v < r.core.num_vertices(); ++v) CHECK(r.core.degree(v) >= 3);
      }
    }
  }

  TEST_CASE("two-terminal recognition") {
    CHECK(is_two_terminal_series_parallel({gen::cycle(4), 0, 2}));
    // K_4 minus an edge with the terminals on the missing edge.
    std::vector<Edge> e{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK_FALSE(is_two_terminal_series_parallel({Graph::from_edges(4, e), 0, 1}));
    CHECK(is_two_terminal_series_parallel({Graph::from_edges(4, e), 2, 3}));
  }

  TEST_CASE("H' of a layer path is the path") {
    auto w = build_layered_wheel({1, 3});
    auto h = labeled_subgraph(w, w.layer_path(1));
    auto hp = contract_to_h_prime(h.graph, h.classes);
    CHECK(hp.h_prime.num_vertices() == 17);
    CHECK(are_isomorphic(hp.h_prime, gen::path(17)));
  }

  TEST_CASE("a big vertex with its medium neighbors contracts to one vertex") {
    auto w = build_layered_wheel({1, 5});
    auto h = labeled_subgraph(w, {w.id(1, 32), w.id(2, 32), w.id(3, 32), w.id(4, 32)});
    auto hp = contract_to_h_prime(h.graph, h.classes);
    CHECK(hp.h_prime.num_vertices() == 1);
    CHECK(hp.kind[0] == VertexClass::big);
    CHECK(hp.big_of[0] == 0);
  }

  TEST_CASE("contract_to_h_prime matches union-find contraction") {
    std::mt19937_64 rng(17);
    for (auto p : {LayeredWheelParams{1, 3}, {1, 4}, {2, 3}}) {
      auto w = build_layered_wheel(p);
      for (int i = 0; i < 20; ++i) {
        auto keep = sample_kept_vertices(w, 0.1 * (i % 5), rng);
        auto h = labeled_subgraph(w, keep);
        auto hp = contract_to_h_prime(h.graph, h.classes);
        auto ref = contract_big_medium(h.graph, h.classes);
        CHECK(hp.branch_map == ref.sets);
        CHECK(hp.h_prime == ref.graph);
        for (std::size_t x = 0; x < hp.branch_map.size(); ++x)
          for (Vertex v : hp.branch_map[x]) CHECK(hp.owner[v] == static_cast<Vertex>(x));
      }
    }
  }

  TEST_CASE("H' of whole instances is series-parallel") {
    for (auto p : {LayeredWheelParams{1, 3}, {1, 5}, {2, 4}}) {
      auto w = build_layered_wheel(p);
      auto h = labeled_whole(w);
      CHECK(is_series_parallel(contract_to_h_prime(h.graph, h.classes).h_prime).series_parallel);
    }
    auto h = labeled_whole(build_layered_wheel({1, 3}));
    std::vector<VertexClass> short_classes(h.classes.begin(), h.classes.end() - 1);
    CHECK_THROWS_AS(contract_to_h_prime(h.graph, short_classes), PreconditionError);
  }

  TEST_CASE("c(F) of disjoint paths is F") {
    auto f = two_paths({});
    auto r = c_of_F(f, kTwoPaths);
    CHECK(r.b_prime.empty());
    CHECK(r.series_parallel);
    CHECK(are_isomorphic(r.contracted.graph, f.graph));
  }

  TEST_CASE("c(F) contracts B' neighborhoods") {
    auto f = two_paths({{2, 4}, {3, 5}});
    auto r = c_of_F(f, kTwoPaths);
    CHECK(r.b_prime == VertexSet{2, 3});
    CHECK(r.lower == VertexSet{4, 5});
    CHECK(r.contracted.graph.num_vertices() == 4);
    CHECK(r.series_parallel);
  }

  TEST_CASE("c(F) hypotheses") {
    auto crossing = two_paths({{2, 5}, {3, 4}});
    try {
      c_of_F(crossing, kTwoPaths);
      FAIL("expected a hypothesis error");
    } catch (const HypothesisError& e) {
      CHECK(e.condition() == "iii");
    }
    auto two_hits = two_paths({{2, 4}, {2, 5}});
    try {
      c_of_F(two_hits, kTwoPaths);
      FAIL("expected a hypothesis error");
    } catch (const HypothesisError& e) {
      CHECK(e.condition() == "ii");
    }
    std::vector<std::vector<Vertex>> short_paths{{0, 2, 3, 1}};
    try {
      c_of_F(two_paths({}), short_paths);
      FAIL("expected a hypothesis error");
    } catch (const HypothesisError& e) {
      CHECK(e.condition() == "i");
    }
  }

  TEST_CASE("c(F) for layered wheels with terminals") {
    std::mt19937_64 rng(23);
    for (auto p : {LayeredWheelParams{1, 3}, {1, 4}, {2, 3}}) {
      auto w = build_layered_wheel(p);
      auto whole = terminal_instance(w, {});
      auto r = c_of_F(whole.f, whole.paths);
      CHECK(r.series_parallel);
      for (int i = 0; i < 10; ++i) {
        auto keep = sample_kept_vertices(w, 0.3, rng);
        VertexSet removed;
        std::size_t j = 0;
        for (Vertex v = 0; v < w.graph().num_vertices(); ++v) {
          if (j < keep.size() && keep[j] == v) {
            ++j;
          } else {
            removed.push_back(v);
          }
        }
        auto inst = terminal_instance(w, removed);
        CHECK(c_of_F(inst.f, inst.paths).series_parallel);
      }
    }
  }
}
