// Acceptance gate: one line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "lw/generators.hpp"
#include "lw/graph_io.hpp"
#include "lw/layered_wheel.hpp"
#include "lw/minor_models.hpp"
#include "lw/report.hpp"
#include "lw/separators.hpp"
#include "lw/series_parallel.hpp"
#include "lw/theta_tools.hpp"
#include "lw/treewidth.hpp"
#include "oracles.hpp"
#include "scenario.hpp"

using namespace lw;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

std::vector<LayeredWheelParams> construction_range() {
  std::vector<LayeredWheelParams> out;
  for (int g = 1; g <= 3; ++g)
    for (int k = 1; k <= 6; ++k) {
      LayeredWheelParams p{g, k};
      if (p.vertex_count() <= 1'000'000) out.push_back(p);
    }
  return out;
}

std::string name(const LayeredWheelParams& p) {
  return "G_" + std::to_string(p.k) + "^" + std::to_string(p.g);
}

Outcome construction() {
  Outcome o;
  int instances = 0;
  for (auto p : construction_range()) {
    auto w = build_layered_wheel(p);
    std::int64_t cross = 0;
    for (int i = 1; i < p.k; ++i) cross += (std::int64_t{1} << (i - 1)) * (p.k - i);
    const std::int64_t n = p.k * ((std::int64_t{1} << (p.k + p.g)) + 1);
    const std::int64_t m = p.k * (std::int64_t{1} << (p.k + p.g)) + cross;
    if (w.graph().num_vertices() != n || static_cast<std::int64_t>(w.graph().num_edges()) != m) {
      o.fail(name(p) + ": counts differ from the closed forms");
    }
    for (const auto& c : verify_construction_invariants(w).checks)
      if (!c.passed) o.fail(name(p) + " " + c.name + ": " + c.counterexample);
    ++instances;
  }
  o.detail = o.passed ? std::to_string(instances) + " instances" : o.detail;
  return o;
}

Outcome clique_models() {
  Outcome o;
  int instances = 0;
  for (auto p : construction_range()) {
    auto w = build_layered_wheel(p);
    auto cert = linear_clique_model(w);
    auto check = validate_model(w.graph(), cert.model, true, false);
    if (!check.ok() || cert.model.branch_sets.size() != static_cast<std::size_t>(p.k) ||
        cert.model.pattern.num_edges() != static_cast<std::size_t>(p.k * (p.k - 1) / 2)) {
      o.fail(name(p) + ": " + check.detail);
    }
    ++instances;
  }
  o.detail = o.passed ? std::to_string(instances) + " K_k models, tw >= k-1 certified" : o.detail;
  return o;
}

Outcome series_parallel() {
  Outcome o;
  int graphs = 0;
  std::mt19937_64 rng(2024);
  for (int g : {1, 2})
    for (int k : {3, 4, 5}) {
      auto w = build_layered_wheel({g, k});
      for (int s = -1; s < 200; ++s) {
        VertexSet keep;
        if (s < 0) {
          keep.resize(w.graph().num_vertices());
          std::iota(keep.begin(), keep.end(), 0);
        } else {
          keep = sample_kept_vertices(w, 0.05 + 0.1 * (s % 6), rng);
        }
        auto h = labeled_subgraph(w, keep);
        auto hp = contract_to_h_prime(h.graph, h.classes);
        if (!is_series_parallel(hp.h_prime).series_parallel) {
          o.fail(name({g, k}) + " sample " + std::to_string(s) + ": H' is not series-parallel");
        }
        ++graphs;
      }
    }
  o.detail = o.passed ? std::to_string(graphs) + " graphs H', zero failures" : o.detail;
  return o;
}

Outcome treewidth() {
  Outcome o;
  auto expect = [&](const std::string& label, const Graph& g, int width) {
    auto r = exact_treewidth(g);
    if (!r.exact || r.width != width || r.decomposition.width() != width) {
      o.fail(label + ": got " + std::to_string(r.width));
    }
    if (auto why = validate(g, r.decomposition)) o.fail(label + ": " + *why);
  };
  expect("K_4", gen::complete(4), 3);
  expect("C_6", gen::cycle(6), 2);
  expect("3x3 wall", gen::wall(3), 3);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 20; ++i) expect("tree", gen::random_tree(5 + i, rng), 1);
  expect("P_2", gen::path(2), 1);
  return o;
}

Outcome path_families() {
  Outcome o;
  std::ostringstream summary;
  for (int k : {3, 4}) {
    auto w = build_layered_wheel({1, k});
    VertexSet bigs;
    for (Vertex v = 0; v < w.graph().num_vertices(); ++v)
      if (w.vertex_class(v) == VertexClass::big) bigs.push_back(v);
    std::size_t largest = 0;
    int pairs = 0;
    for (std::size_t i = 0; i < bigs.size(); ++i)
      for (std::size_t j = i + 1; j < bigs.size(); ++j) {
        auto r = max_anticomplete_path_family(w.graph(), bigs[i], bigs[j], 8, 10'000'000);
        ++pairs;
        if (!r.exhaustive) o.fail(name({1, k}) + ": budget exhausted on a pair");
        if (r.family.paths.size() > 7) o.fail(name({1, k}) + ": a family of 8 paths");
        if (auto why = validate_path_family(w.graph(), r.family)) o.fail(*why);
        largest = std::max(largest, r.family.paths.size());
      }
    summary << name({1, k}) << ": " << pairs << " pairs, max " << largest << " (3 " << (largest == 3 ? "" : "not ")
            << "attained); ";
  }
  if (o.passed) o.detail = summary.str();
  return o;
}

Outcome separators() {
  Outcome o;
  static constexpr double kRates[] = {0.0, 0.1, 0.3};
  static constexpr double kDensity[] = {1.0, 0.3, 0.05};
  int runs = 0, max_width = -1;
  std::size_t max_k = 0;
  std::mt19937_64 rng(55);
  for (int g : {1, 2})
    for (int k : {3, 4}) {
      auto w = build_layered_wheel({g, k});
      for (int s = 0; s < 100; ++s) {
        auto keep = sample_kept_vertices(w, kRates[s % 3], rng);
        if (keep.empty()) continue;
        auto h = labeled_subgraph(w, keep);
        auto weights = random_weights(h.graph.num_vertices(), rng, kDensity[(s / 3) % 3]);
        auto st = build_pipeline(h.graph, h.classes, weights);
        ++runs;
        const std::string where = name({g, k}) + " sample " + std::to_string(s);
        if (!oracle::balanced(h.graph, weights, st.k)) o.fail(where + ": K is not balanced");
        if (static_cast<int>(st.k.size()) > 21 + 9 * (st.td_width + 1)) o.fail(where + ": |K| above the bound");
        if (auto why = validate(st.h_dprime, st.td_dprime)) o.fail(where + ": " + *why);
        for (const auto& c : verify_H_separator_bound(st).checks)
          if (!c.passed) o.fail(where + " " + c.name + ": " + c.detail);
        for (const auto& c : verify_h_prime_properties(st.h_prime, g).checks)
          if (!c.passed) o.fail(where + " " + c.name + ": " + c.detail);
        max_width = std::max(max_width, st.td_width);
        max_k = std::max(max_k, st.k.size());
      }
    }
  if (o.passed) {
    o.detail = std::to_string(runs) + " pipelines, max |K| " + std::to_string(max_k) + ", max width(H'') " +
               std::to_string(max_width);
  }
  return o;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

Outcome non_outerstring() {
  Outcome o;
  std::ostringstream summary;
  for (auto lengths : {std::vector<int>{4, 4, 4}, {4, 4, 5}, {4, 5, 5}, {5, 5, 5}}) {
    auto g = gen::theta(lengths);
    auto r = crossing_witness_all_orders(g);
    const auto n = g.num_vertices();
    if (r.counterexample) o.fail("an order of a theta on " + std::to_string(n) + " vertices has no witness");
    if (r.orders != factorial(n)) o.fail("order count " + std::to_string(r.orders) + " != " + std::to_string(n) + "!");
    summary << n << "! ";
  }
  const std::vector<int> ten{10, 10, 10};
  auto g = gen::theta(ten);
  ThetaCertificate t{0, 1, {}, 10};
  Vertex next = 2;
  for (int i = 0; i < 3; ++i) {
    t.paths[i].push_back(0);
    for (int s = 1; s < 10; ++s) t.paths[i].push_back(next++);
    t.paths[i].push_back(1);
  }
  std::vector<Vertex> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(10);
  for (int i = 0; i < 10'000; ++i) {
    std::shuffle(order.begin(), order.end(), rng);
    auto w = crossing_witness(g, t, order);
    if (!w) {
      o.fail("random order without a witness on the length-10 theta");
      break;
    }
    auto sub = induced_subgraph(g, make_vertex_set({w->x.begin(), w->x.end()}));
    if (sub.graph.num_edges() != 2 || !g.has_edge(w->x[0], w->x[2]) || !g.has_edge(w->x[1], w->x[3])) {
      o.fail("invalid witness");
      break;
    }
  }
  if (o.passed) o.detail = "all orders (" + summary.str() + ") of lengths 4-5, 10^4 orders at length 10";
  return o;
}

Outcome long_theta() {
  Outcome o;
  std::ostringstream summary;
  for (int g : {1, 3}) {
    auto sc = scenario::high_degree(g);
    auto st = build_pipeline(sc.h.graph, sc.h.classes, sc.w);
    auto out = extract_long_theta_from_pipeline(st);
    if (out.kind != LongThetaOutcome::Kind::theta) {
      o.fail("g=" + std::to_string(g) + ": " + std::string(to_string(out.kind)) + " " + out.detail);
      continue;
    }
    if (auto why = validate_theta(sc.h.graph, *out.theta)) o.fail("g=" + std::to_string(g) + ": " + *why);
    if (out.theta->length < (1 << g) - 1) o.fail("g=" + std::to_string(g) + ": theta too short");
    summary << "g=" << g << ": max deg(H'') " << out.max_degree << ", theta length " << out.theta->length << "; ";
  }
  if (o.passed) o.detail = summary.str();
  return o;
}

Outcome cross_oracles() {
  Outcome o;
  std::vector<Graph> patterns;
  for (int n = 1; n <= 4; ++n)
    for (auto& p : oracle::all_graphs(n)) patterns.push_back(std::move(p));
  std::vector<std::string> pattern_keys;
  for (const auto& p : patterns) pattern_keys.push_back(oracle::canonical(p));
  std::mt19937_64 rng(9);
  int hosts = 0, queries = 0;
  for (int n = 1; n <= 7; ++n)
    for (const auto& g : oracle::all_connected_graphs(n)) {
      ++hosts;
      const auto minors = oracle::induced_minors(g, 4);
      for (std::size_t i = 0; i < patterns.size(); ++i) {
        auto r = contains_induced_minor(g, patterns[i]);
        ++queries;
        if (r.status == SearchStatus::budget_exceeded) o.fail("induced minor search ran out of budget");
        if ((r.status == SearchStatus::found) != (minors.count(pattern_keys[i]) > 0)) {
          o.fail("induced minor disagreement on a " + std::to_string(n) + "-vertex host");
        }
        if (r.model && !validate_model(g, *r.model, false, true).ok()) o.fail("invalid induced minor model");
      }
      if (is_series_parallel(g).series_parallel == oracle::has_k4_minor(g)) o.fail("series-parallel disagreement");
      if (girth(g) != oracle::girth_by_cycles(g)) o.fail("girth disagreement");
      for (const auto& w : {WeightFunction::uniform(n), random_weights(n, rng, 0.5)}) {
        if (min_balanced_separator(g, w, n) != oracle::min_balanced(g, w, n)) o.fail("separator disagreement");
      }
    }
  if (o.passed) o.detail = std::to_string(hosts) + " hosts, " + std::to_string(queries) + " minor queries";
  return o;
}

Outcome serialization() {
  Outcome o;
  std::mt19937_64 rng(100);
  for (auto f : {GraphFormat::edgelist, GraphFormat::dimacs, GraphFormat::dot, GraphFormat::json}) {
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<Vertex> size(0, 40);
      auto g = gen::random_gnp(size(rng), 0.15, rng);
      auto text = graph_to_string(g, f);
      auto back = read_graph(text, f);
      if (!(back.graph == g) || graph_to_string(back.graph, f) != text) {
        o.fail(std::string(to_string(f)) + " round trip differs");
      }
    }
    auto w = build_layered_wheel({2, 4});
    auto labels = wheel_labels(w);
    auto text = graph_to_string(w.graph(), f, &labels);
    auto back = read_graph(text);
    if (!(back.graph == w.graph())) o.fail(std::string(to_string(f)) + " layered wheel round trip differs");
    if (f == GraphFormat::json && (!back.labels || *back.labels != labels)) o.fail("labels lost");
  }
  SuiteOptions opt;
  opt.params = {1, 3};
  opt.seed = 42;
  opt.samples = 10;
  const auto a = run_suite(opt).to_json(false).dump();
  const auto b = run_suite(opt).to_json(false).dump();
  if (a != b) o.fail("reports differ between runs with one seed");
  if (o.passed) o.detail = "400 round trips, stable report of " + std::to_string(a.size()) + " bytes";
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "construction invariants", 60, construction},
      {2, "linear clique models", 10, clique_models},
      {3, "H' series-parallel", 300, series_parallel},
      {4, "exact treewidth", 30, treewidth},
      {5, "big-pair path families <= 7", 600, path_families},
      {6, "separator pipeline", 600, separators},
      {7, "crossing witnesses for long thetas", 300, non_outerstring},
      {8, "long theta from high-degree H''", 120, long_theta},
      {9, "cross-oracle agreement", 600, cross_oracles},
      {10, "serialization and stable reports", 60, serialization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.passed && s > c.limit_s) o.fail("took longer than " + std::to_string(static_cast<int>(c.limit_s)) + " s");
    failures += !o.passed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << c.title << "  (" << s << " s)  "
         << o.detail;
    std::cout << line.str() << std::endl;
  }
  return failures ? 1 : 0;
}
