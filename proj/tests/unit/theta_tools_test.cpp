#include <doctest.h>

#include <numeric>
#include <random>

#include "lw/errors.hpp"
#include "lw/generators.hpp"
#include "lw/theta_tools.hpp"
#include "oracles.hpp"
#include "scenario.hpp"

using namespace lw;

namespace {

// Certificate for gen::theta(lengths), whose interior vertices are numbered
// path by path from end 0 towards end 1.
ThetaCertificate certificate(const std::vector<int>& lengths) {
  ThetaCertificate t{0, 1, {}, *std::min_element(lengths.begin(), lengths.end())};
  Vertex next = 2;
  for (int i = 0; i < 3; ++i) {
    t.paths[i].push_back(0);
    for (int s = 1; s < lengths[i]; ++s) t.paths[i].push_back(next++);
    t.paths[i].push_back(1);
  }
  return t;
}

std::vector<Vertex> identity(Vertex n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Inclusion-minimal connected sets avoiding and touching all three ends.
bool is_minimal_connector(const Graph& t, const VertexSet& f, std::array<Vertex, 3> ends) {
  auto works = [&](const VertexSet& s) {
    if (s.empty() || !is_connected_subset(t, s)) return false;
    for (Vertex e : ends) {
      bool touch = false;
      for (Vertex x : s) touch = touch || t.has_edge(e, x);
      if (!touch) return false;
    }
    return true;
  };
  if (!works(f)) return false;
  const auto m = f.size();
  for (std::uint32_t sub = 0; sub + 1 < (1u << m); ++sub) {
    VertexSet s;
    for (std::size_t i = 0; i < m; ++i)
      if (sub >> i & 1u) s.push_back(f[i]);
    if (works(s)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("theta_tools") {
  TEST_CASE("theta validation") {
    auto g = gen::theta({3, 3, 4});
    auto t = certificate({3, 3, 4});
    CHECK_FALSE(validate_theta(g, t).has_value());
    auto wrong_length = t;
    wrong_length.length = 4;
    CHECK(validate_theta(g, wrong_length).has_value());
    auto chord = Graph::from_edges(g.num_vertices(), [&] {
      auto e = g.edges();
      e.emplace_back(2, 4);
      return e;
    }());
    CHECK(validate_theta(chord, t).has_value());
  }

  TEST_CASE("find_long_theta") {
    auto r = find_long_theta(gen::theta({5, 5, 5}), 4);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.theta->length == 5);
    CHECK_FALSE(validate_theta(gen::theta({5, 5, 5}), *r.theta).has_value());
    CHECK(find_long_theta(gen::theta({5, 5, 3}), 4).status == SearchStatus::none);
    std::mt19937_64 rng(6);
    for (int i = 0; i < 5; ++i) CHECK(find_long_theta(gen::random_tree(20, rng), 2).status == SearchStatus::none);
    CHECK(find_long_theta(gen::cycle(8), 2).status == SearchStatus::none);
    CHECK(find_long_theta(gen::wall(3), 2).status == SearchStatus::found);
    CHECK(find_long_theta(gen::theta({5, 5, 5}), 4, 2).status == SearchStatus::budget_exceeded);
  }

  TEST_CASE("crossing witnesses") {
    const std::vector<int> lengths{4, 4, 4};
    auto g = gen::theta(lengths);
    auto t = certificate(lengths);
    std::mt19937_64 rng(1);
    auto order = identity(g.num_vertices());
    for (int i = 0; i < 20; ++i) {
      std::shuffle(order.begin(), order.end(), rng);
      auto w = crossing_witness(g, t, order);
      REQUIRE(w.has_value());
      auto sub = induced_subgraph(g, make_vertex_set({w->x.begin(), w->x.end()}));
      CHECK(sub.graph.num_edges() == 2);
      CHECK(g.has_edge(w->x[0], w->x[2]));
      CHECK(g.has_edge(w->x[1], w->x[3]));
    }
    CHECK_THROWS_AS(crossing_witness(gen::theta({2, 2, 2}), certificate({2, 2, 2}), identity(5)), PreconditionError);
    CHECK_THROWS_AS(crossing_witness(g, t, identity(5)), PreconditionError);
  }

  TEST_CASE("crossing witness agrees with the quadruple scan") {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 200; ++i) {
      auto g = gen::random_gnp(8, 0.3, rng);
      auto order = identity(8);
      std::shuffle(order.begin(), order.end(), rng);
      CHECK(crossing_witness(g, order).has_value() == oracle::has_crossing_quadruple(g, order));
    }
  }

  TEST_CASE("all orders") {
    auto small = crossing_witness_all_orders(gen::theta({4, 4, 4}));
    CHECK_FALSE(small.counterexample.has_value());
    CHECK(small.orders == 39916800);
    // A 6-cycle is outerstring, so some order has no witness.
    auto c6 = crossing_witness_all_orders(gen::cycle(6));
    REQUIRE(c6.counterexample.has_value());
    CHECK_FALSE(oracle::has_crossing_quadruple(gen::cycle(6), *c6.counterexample));
    CHECK_THROWS_AS(crossing_witness_all_orders(gen::path(21)), CapExceeded);
  }

  TEST_CASE("all orders agree with brute force over permutations") {
    std::mt19937_64 rng(40);
    for (int i = 0; i < 40; ++i) {
      auto g = gen::random_gnp(7, 0.35, rng);
      auto order = identity(7);
      bool every = true;
      do {
        every = every && oracle::has_crossing_quadruple(g, order);
      } while (every && std::next_permutation(order.begin(), order.end()));
      auto r = crossing_witness_all_orders(g);
      CHECK(r.counterexample.has_value() == !every);
      if (r.counterexample) CHECK_FALSE(oracle::has_crossing_quadruple(g, *r.counterexample));
      if (every) CHECK(r.orders == 5040);
    }
  }

  TEST_CASE("path families") {
    auto k23 = gen::complete_bipartite(2, 3);
    auto r = max_anticomplete_path_family(k23, 0, 1);
    CHECK(r.exhaustive);
    CHECK(r.family.paths.size() == 3);
    CHECK_FALSE(validate_path_family(k23, r.family).has_value());
    CHECK(max_anticomplete_path_family(gen::cycle(6), 0, 3).family.paths.size() == 2);

    auto w = build_layered_wheel({1, 3});
    auto big = max_anticomplete_path_family(w.graph(), w.id(1, 8), w.id(2, 4));
    CHECK(big.exhaustive);
    CHECK(big.family.paths.size() <= 7);
    CHECK(big.family.paths.size() == 2);
    CHECK_FALSE(validate_path_family(w.graph(), big.family).has_value());
  }

  TEST_CASE("path families agree with subfamily enumeration") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 150; ++i) {
      auto g = gen::random_gnp(9, 0.3, rng);
      std::uniform_int_distribution<Vertex> pick(0, 8);
      Vertex u = pick(rng), v = pick(rng);
      if (u == v || g.has_edge(u, v)) continue;
      auto r = max_anticomplete_path_family(g, u, v);
      CHECK(static_cast<int>(r.family.paths.size()) == oracle::max_path_family(g, u, v));
      CHECK_FALSE(validate_path_family(g, r.family).has_value());
    }
  }

  TEST_CASE("wide thetas") {
    auto r = find_wide_theta(gen::complete_bipartite(2, 8), 8);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.theta->paths.size() == 8);
    CHECK(find_wide_theta(build_layered_wheel({1, 3}).graph(), 8).status == SearchStatus::none);
    CHECK(find_wide_theta(gen::path(6), 2).status == SearchStatus::none);
    CHECK(find_wide_theta(gen::cycle(6), 2).status == SearchStatus::found);
  }

  TEST_CASE("minimal connectors") {
    auto star = gen::star(3);
    auto s = minimal_connector(star, 1, 2, 3);
    CHECK(s.outcome == ConnectorOutcome::tripod);
    CHECK(s.center == 0);
    CHECK(s.f == VertexSet{0});
    CHECK(s.legs[1] == std::vector<Vertex>{0, 2});

    // v1 - a - b - v2 with v3 adjacent to a and b: {a, b, v3} is a triangle.
    std::vector<Edge> e{{0, 1}, {1, 2}, {2, 3}, {4, 1}, {4, 2}};
    CHECK_THROWS_AS(minimal_connector(Graph::from_edges(5, e), 0, 3, 4), PreconditionError);

    auto claw = gen::subdivided_star({3, 2, 4});
    auto c = minimal_connector(claw, 3, 5, 9);
    CHECK(c.outcome == ConnectorOutcome::tripod);
    CHECK(c.center == 0);
    CHECK(c.minimal);
    CHECK(is_minimal_connector(claw, c.f, {3, 5, 9}));

    // v3 sees two non-adjacent vertices of a path from v1 to v2.
    std::vector<Edge> p{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {6, 1}, {6, 4}};
    auto q = minimal_connector(Graph::from_edges(7, p), 0, 5, 6);
    CHECK(q.outcome == ConnectorOutcome::path_or_hole);
    CHECK(q.ijk == std::array<int, 3>{0, 1, 2});
    CHECK(q.path == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
    CHECK_FALSE(q.hole);

    CHECK_THROWS_AS(minimal_connector(star, 1, 1, 3), PreconditionError);
    CHECK_THROWS_AS(minimal_connector(gen::path(5), 0, 2, 4), PreconditionError);
  }

  TEST_CASE("connectors on random triangle-free graphs are minimal") {
    std::mt19937_64 rng(14);
    int checked = 0;
    for (int i = 0; i < 400 && checked < 60; ++i) {
      auto g = gen::random_gnp(10, 0.25, rng);
      if (!is_triangle_free(g)) continue;
      try {
        auto r = minimal_connector(g, 0, 1, 2);
        ++checked;
        CHECK(r.minimal);
        CHECK(is_minimal_connector(g, r.f, {0, 1, 2}));
        CHECK(r.outcome != ConnectorOutcome::unclassified);
      } catch (const PreconditionError&) {
      }
    }
    CHECK(checked > 10);
  }

  TEST_CASE("degree bound branch on whole instances") {
    auto w = build_layered_wheel({1, 3});
    auto h = labeled_whole(w);
    auto st = build_pipeline(h.graph, h.classes, WeightFunction::uniform(h.graph.num_vertices()));
    auto out = extract_long_theta_from_pipeline(st);
    CHECK(out.kind == LongThetaOutcome::Kind::degree_bound_holds);
    CHECK(out.max_degree < 9);
  }

  TEST_CASE("high-degree scenario yields a long theta") {
    for (int g : {1, 3}) {
      auto sc = scenario::high_degree(g);
      auto st = build_pipeline(sc.h.graph, sc.h.classes, sc.w);
      REQUIRE(st.k_prime_found);
      CHECK(st.y_big_high == VertexSet{sc.b});
      CHECK(st.h_dprime.max_degree() == 9);
      auto out = extract_long_theta_from_pipeline(st);
      INFO(out.detail);
      REQUIRE(out.kind == LongThetaOutcome::Kind::theta);
      CHECK(out.big == sc.b);
      CHECK_FALSE(validate_theta(sc.h.graph, *out.theta).has_value());
      CHECK(out.theta->length >= (1 << g) - 1);
      CHECK(verify_H_separator_bound(st).all_passed());
    }
  }
}
