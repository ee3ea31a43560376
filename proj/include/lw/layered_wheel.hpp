#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lw/graph.hpp"

namespace lw {

/// Parameters (g, k) of the layered wheel: k layer paths, each of length 2^(k+g).
struct LayeredWheelParams {
  int g = 1;
  int k = 1;

  std::int64_t path_length() const { return std::int64_t{1} << (k + g); }
  std::int64_t vertices_per_layer() const { return path_length() + 1; }
  std::int64_t vertex_count() const { return k * vertices_per_layer(); }
  /// k * 2^(k+g) path edges plus sum_{i<k} 2^(i-1) (k-i) cross edges.
  std::int64_t edge_count() const;

  friend bool operator==(const LayeredWheelParams&, const LayeredWheelParams&) = default;
};

/// Vertex P_layer^index, layer in [1, k], index in [0, 2^(k+g)].
struct LayeredVertex {
  int layer = 1;
  std::int64_t index = 0;

  friend bool operator==(const LayeredVertex&, const LayeredVertex&) = default;
};

enum class VertexClass : std::uint8_t { big, medium, small };

std::string_view to_string(VertexClass c);
VertexClass vertex_class_from_string(std::string_view name);

inline constexpr std::int64_t kDefaultVertexCap = 1'000'000;

/// Throws PreconditionError on g < 1 or k < 1 and CapExceeded when the
/// instance would exceed `vertex_cap` vertices.
void check_params(const LayeredWheelParams& params, std::int64_t vertex_cap = kDefaultVertexCap);

Vertex vertex_id(const LayeredWheelParams& params, LayeredVertex v);
LayeredVertex coordinates(const LayeredWheelParams& params, Vertex id);

/// Big iff the 2-adic valuation of the index is k - layer + g, medium iff it
/// lies in (k - layer + g, k - 1 + g], small otherwise. Both path ends are small.
VertexClass classify(const LayeredWheelParams& params, LayeredVertex v);

class LayeredWheel {
 public:
  LayeredWheel(LayeredWheelParams params, Graph graph);

  const LayeredWheelParams& params() const { return params_; }
  const Graph& graph() const { return graph_; }

  Vertex id(int layer, std::int64_t index) const { return vertex_id(params_, {layer, index}); }
  LayeredVertex coordinates(Vertex v) const { return lw::coordinates(params_, v); }
  VertexClass vertex_class(Vertex v) const { return classes_[v]; }
  const std::vector<VertexClass>& classes() const { return classes_; }
  /// Vertex ids of layer path P_layer, in index order.
  VertexSet layer_path(int layer) const;

 private:
  LayeredWheelParams params_;
  Graph graph_;
  std::vector<VertexClass> classes_;
};

/// Builds G_k^g. Cross edges are generated from the smaller layer's big
/// indices, so construction is linear in the edge count.
LayeredWheel build_layered_wheel(const LayeredWheelParams& params, std::int64_t vertex_cap = kDefaultVertexCap);

/// An induced subgraph H of a built instance that keeps the classification
/// of its vertices.
struct LabeledSubgraph {
  Graph graph;
  std::vector<VertexClass> classes;
  /// H id -> id in the full instance.
  std::vector<Vertex> wheel_ids;
};

LabeledSubgraph labeled_subgraph(const LayeredWheel& wheel, VertexSet keep);
LabeledSubgraph labeled_whole(const LayeredWheel& wheel);

/// Keeps each vertex independently with probability 1 - `deletion_rate`.
VertexSet sample_kept_vertices(const LayeredWheel& wheel, double deletion_rate, std::mt19937_64& rng);

struct InvariantCheck {
  std::string name;
  std::string claim;
  bool passed = true;
  std::string counterexample{};
  /// Measured quantity where one exists (girth, minimum distance, ...); -1 if none.
  std::int64_t measured = -1;
};

struct ConstructionReport {
  LayeredWheelParams params;
  std::vector<InvariantCheck> checks;

  bool all_passed() const;
  const InvariantCheck* find(std::string_view name) const;
};

/// Runs every structural check on a built instance: vertex and edge counts,
/// triangle-freeness, girth, degree conditions on edges, big-vertex spacing,
/// degree-3 neighborhoods and the degree formulas of each vertex class.
ConstructionReport verify_construction_invariants(const LayeredWheel& wheel);
ConstructionReport verify_construction_invariants(const LayeredWheelParams& params);

}  // namespace lw
