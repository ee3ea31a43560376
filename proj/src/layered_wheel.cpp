#include "lw/layered_wheel.hpp"

#include <bit>
#include <sstream>

#include "lw/errors.hpp"

namespace lw {

std::int64_t LayeredWheelParams::edge_count() const {
  std::int64_t cross = 0;
  for (int i = 1; i < k; ++i) cross += (std::int64_t{1} << (i - 1)) * (k - i);
  return k * path_length() + cross;
}

std::string_view to_string(VertexClass c) {
  switch (c) {
    case VertexClass::big:
      return "big";
    case VertexClass::medium:
      return "medium";
    case VertexClass::small:
      return "small";
  }
  return "small";
}

VertexClass vertex_class_from_string(std::string_view name) {
  if (name == "big") return VertexClass::big;
  if (name == "medium") return VertexClass::medium;
  if (name == "small") return VertexClass::small;
  throw ParseError("unknown vertex class '" + std::string(name) + "'");
}

void check_params(const LayeredWheelParams& params, std::int64_t vertex_cap) {
  if (params.g < 1 || params.k < 1) throw PreconditionError("layered wheel needs g >= 1 and k >= 1");
  // 2^(k+g) overflows long before any sane cap; reject by exponent first.
  if (params.k + params.g > 40 || params.vertex_count() > vertex_cap) {
    std::ostringstream msg;
    msg << "vertex cap exceeded: k=" << params.k << ", g=" << params.g << " needs k*(2^(k+g)+1) vertices, cap is "
        << vertex_cap;
    throw CapExceeded(msg.str());
  }
}

Vertex vertex_id(const LayeredWheelParams& params, LayeredVertex v) {
  if (v.layer < 1 || v.layer > params.k || v.index < 0 || v.index > params.path_length()) {
    throw GraphError("layered vertex out of range");
  }
  return static_cast<Vertex>((v.layer - 1) * params.vertices_per_layer() + v.index);
}

LayeredVertex coordinates(const LayeredWheelParams& params, Vertex id) {
  if (id < 0 || id >= params.vertex_count()) throw GraphError("vertex id out of range");
  const auto per = params.vertices_per_layer();
  return {static_cast<int>(id / per) + 1, id % per};
}

VertexClass classify(const LayeredWheelParams& params, LayeredVertex v) {
  if (v.index <= 0 || v.index >= params.path_length()) return VertexClass::small;
  const int valuation = std::countr_zero(static_cast<std::uint64_t>(v.index));
  const int big_valuation = params.k - v.layer + params.g;
  if (valuation == big_valuation) return VertexClass::big;
  if (valuation > big_valuation && valuation <= params.k - 1 + params.g) return VertexClass::medium;
  return VertexClass::small;
}

LayeredWheel::LayeredWheel(LayeredWheelParams params, Graph graph) : params_(params), graph_(std::move(graph)) {
  if (graph_.num_vertices() != params_.vertex_count()) throw GraphError("graph does not match layered wheel size");
  classes_.reserve(graph_.num_vertices());
  for (Vertex v = 0; v < graph_.num_vertices(); ++v) classes_.push_back(classify(params_, coordinates(v)));
}

VertexSet LayeredWheel::layer_path(int layer) const {
  VertexSet out;
  for (std::int64_t x = 0; x <= params_.path_length(); ++x) out.push_back(id(layer, x));
  return out;
}

LayeredWheel build_layered_wheel(const LayeredWheelParams& params, std::int64_t vertex_cap) {
  check_params(params, vertex_cap);
  const auto length = params.path_length();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(params.edge_count()));
  for (int layer = 1; layer <= params.k; ++layer) {
    for (std::int64_t x = 0; x < length; ++x) {
      edges.emplace_back(vertex_id(params, {layer, x}), vertex_id(params, {layer, x + 1}));
    }
  }
  // P_i^x ~ P_j^x for i < j when x = b * 2^(k-i+g) with b odd, b < 2^i.
  for (int i = 1; i < params.k; ++i) {
    const std::int64_t step = std::int64_t{1} << (params.k - i + params.g);
    for (std::int64_t b = 1; b < (std::int64_t{1} << i); b += 2) {
      const Vertex low = vertex_id(params, {i, b * step});
      for (int j = i + 1; j <= params.k; ++j) edges.emplace_back(low, vertex_id(params, {j, b * step}));
    }
  }
  return LayeredWheel(params, Graph::from_edges(static_cast<Vertex>(params.vertex_count()), edges));
}

LabeledSubgraph labeled_subgraph(const LayeredWheel& wheel, VertexSet keep) {
  auto sub = induced_subgraph(wheel.graph(), std::move(keep));
  LabeledSubgraph out{std::move(sub.graph), {}, std::move(sub.new_to_old)};
  out.classes.reserve(out.wheel_ids.size());
  for (Vertex v : out.wheel_ids) out.classes.push_back(wheel.vertex_class(v));
  return out;
}

LabeledSubgraph labeled_whole(const LayeredWheel& wheel) {
  VertexSet all(wheel.graph().num_vertices());
  for (Vertex v = 0; v < wheel.graph().num_vertices(); ++v) all[v] = v;
  return labeled_subgraph(wheel, std::move(all));
}

VertexSet sample_kept_vertices(const LayeredWheel& wheel, double deletion_rate, std::mt19937_64& rng) {
  std::bernoulli_distribution drop(deletion_rate);
  VertexSet keep;
  for (Vertex v = 0; v < wheel.graph().num_vertices(); ++v)
    if (!drop(rng)) keep.push_back(v);
  return keep;
}

bool ConstructionReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

const InvariantCheck* ConstructionReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::string describe(const LayeredWheel& w, Vertex v) {
  auto c = w.coordinates(v);
  std::ostringstream out;
  out << "P_" << c.layer << "^" << c.index << " (" << to_string(w.vertex_class(v)) << ", id " << v << ")";
  return out.str();
}

void fail(InvariantCheck& check, std::string why) {
  if (check.passed) {
    check.passed = false;
    check.counterexample = std::move(why);
  }
}

}  // namespace

ConstructionReport verify_construction_invariants(const LayeredWheel& wheel) {
  const auto& g = wheel.graph();
  const auto& p = wheel.params();
  const int spacing = 1 << p.g;
  ConstructionReport report{p, {}};

  {
    InvariantCheck c{"counts", "|V| = k(2^(k+g)+1) and |E| = k 2^(k+g) + sum 2^(i-1)(k-i)"};
    if (g.num_vertices() != p.vertex_count() || static_cast<std::int64_t>(g.num_edges()) != p.edge_count()) {
      std::ostringstream why;
      why << "got |V|=" << g.num_vertices() << ", |E|=" << g.num_edges() << "; expected " << p.vertex_count()
          << ", " << p.edge_count();
      fail(c, why.str());
    }
    report.checks.push_back(std::move(c));
  }
  {
    InvariantCheck c{"triangle_free", "the graph is triangle-free"};
    if (auto t = find_triangle(g)) {
      fail(c, describe(wheel, (*t)[0]) + ", " + describe(wheel, (*t)[1]) + ", " + describe(wheel, (*t)[2]));
    }
    report.checks.push_back(std::move(c));
  }
  {
    InvariantCheck c{"girth", "girth >= g"};
    auto gi = girth(g);
    c.measured = gi ? *gi : -1;
    if (gi && *gi < p.g) fail(c, "shortest cycle has length " + std::to_string(*gi));
    report.checks.push_back(std::move(c));
  }
  {
    InvariantCheck c{"edge_degrees", "adjacent u,v: deg(u) <= 3 or deg(v) <= 3, and not both big"};
    for (auto [u, v] : g.edges()) {
      if (g.degree(u) > 3 && g.degree(v) > 3) fail(c, "both ends of degree > 3: " + describe(wheel, u) + " - " + describe(wheel, v));
      if (wheel.vertex_class(u) == VertexClass::big && wheel.vertex_class(v) == VertexClass::big) {
        fail(c, "two adjacent big vertices: " + describe(wheel, u) + " - " + describe(wheel, v));
      }
    }
    report.checks.push_back(std::move(c));
  }
  {
    InvariantCheck big_spacing{"big_distance", "distinct big vertices at distance >= 2^g"};
    InvariantCheck high_spacing{"high_degree_distance", "non-adjacent distinct vertices of degree >= 4 at distance >= 2^g"};
    std::int64_t min_big = -1;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const bool big = wheel.vertex_class(v) == VertexClass::big;
      const bool high = g.degree(v) >= 4;
      if (!big && !high) continue;
      auto dist = bfs_distances(g, v);
      for (Vertex w = 0; w < g.num_vertices(); ++w) {
        if (w == v || dist[w] == kUnreachable) continue;
        if (big && wheel.vertex_class(w) == VertexClass::big) {
          if (min_big < 0 || dist[w] < min_big) min_big = dist[w];
          if (dist[w] < spacing) {
            fail(big_spacing, describe(wheel, v) + " and " + describe(wheel, w) + " at distance " + std::to_string(dist[w]));
          }
        }
        if (high && g.degree(w) >= 4 && dist[w] > 1 && dist[w] < spacing) {
          fail(high_spacing, describe(wheel, v) + " and " + describe(wheel, w) + " at distance " + std::to_string(dist[w]));
        }
      }
    }
    big_spacing.measured = min_big;
    report.checks.push_back(std::move(big_spacing));
    report.checks.push_back(std::move(high_spacing));
  }
  {
    InvariantCheck c{"degree3_neighborhood", "a degree-3 vertex has at most one neighbor of degree >= 3"};
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) != 3) continue;
      int heavy = 0;
      for (Vertex w : g.neighbors(v)) heavy += g.degree(w) >= 3;
      if (heavy > 1) fail(c, describe(wheel, v) + " has " + std::to_string(heavy) + " neighbors of degree >= 3");
    }
    report.checks.push_back(std::move(c));
  }
  {
    InvariantCheck c{"class_degrees",
                     "big at layer l < k has degree k-l+2; medium has degree 3; small has degree <= 2"};
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const auto coord = wheel.coordinates(v);
      const auto d = static_cast<int>(g.degree(v));
      switch (wheel.vertex_class(v)) {
        case VertexClass::big:
          if (coord.layer < p.k && d != p.k - coord.layer + 2) fail(c, describe(wheel, v) + " has degree " + std::to_string(d));
          break;
        case VertexClass::medium:
          if (d != 3) fail(c, describe(wheel, v) + " has degree " + std::to_string(d));
          break;
        case VertexClass::small:
          if (d > 2) fail(c, describe(wheel, v) + " has degree " + std::to_string(d));
          break;
      }
    }
    report.checks.push_back(std::move(c));
  }
  return report;
}

ConstructionReport verify_construction_invariants(const LayeredWheelParams& params) {
  return verify_construction_invariants(build_layered_wheel(params));
}

}  // namespace lw
