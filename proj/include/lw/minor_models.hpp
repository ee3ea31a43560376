#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lw/graph.hpp"
#include "lw/layered_wheel.hpp"

namespace lw {

enum class SearchStatus : std::uint8_t { found, none, budget_exceeded };
std::string_view to_string(SearchStatus s);

/// Branch sets X_0..X_{n-1} in a host graph realizing `pattern` (n vertices).
struct Model {
  std::vector<VertexSet> branch_sets;
  Graph pattern;
};

enum class ModelCondition : std::uint8_t {
  ok,
  out_of_range,
  size_mismatch,
  connected,    // some G[X_i] is empty or disconnected
  disjoint,     // X_i and X_j intersect
  edges,        // pattern edge ij without a host edge between X_i and X_j
  linear,       // some G[X_i] is not a path
  induced,      // pattern non-edge ij with X_i, X_j not anticomplete
};
std::string_view to_string(ModelCondition c);

struct ModelCheck {
  ModelCondition violated = ModelCondition::ok;
  int i = -1;
  int j = -1;
  std::string detail;

  bool ok() const { return violated == ModelCondition::ok; }
};

/// Checks the model conditions in order (range, connectivity, disjointness,
/// edges, then the optional linear and induced flags) and reports the first
/// violation with its witness pair.
ModelCheck validate_model(const Graph& host, const Model& model, bool require_linear, bool require_induced);

/// The model induced by a family of branch sets: one vertex per set, an edge
/// whenever some host edge joins two sets.
struct ContractedModel {
  Graph graph;
  std::vector<VertexSet> branch_sets;
  /// Branch-set index of every host vertex, -1 if uncovered.
  std::vector<Vertex> owner;
};

/// Throws ModelError when sets overlap or a set is empty or disconnected.
/// With `complete_cover`, every uncovered host vertex becomes a trailing
/// singleton set, in increasing id order.
ContractedModel contract_model(const Graph& host, std::span<const VertexSet> branch_sets, bool complete_cover = false);

struct CliqueModelCertificate {
  Model model;
  /// Witness edge for every pair i < j of layers (0-based set indices).
  struct Witness {
    int i;
    int j;
    Edge edge;
  };
  std::vector<Witness> witnesses;
};

/// Branch sets V(P_1), ..., V(P_k) realizing K_k; the pair (i, j) is
/// witnessed at index 2^(k-i+g).
CliqueModelCertificate linear_clique_model(const LayeredWheel& wheel);

struct InducedMinorOptions {
  Vertex max_host_vertices = 30;
  Vertex max_pattern_vertices = 6;
  std::uint64_t budget = 10'000'000;
};

struct InducedMinorResult {
  SearchStatus status = SearchStatus::none;
  std::optional<Model> model;
  std::uint64_t nodes = 0;
};

/// Exhaustive branch-set search for `pattern` as an induced minor of `host`.
/// Pattern vertices are placed by decreasing degree (ties by id); each branch
/// set is a connected subset of the vertices not yet used and anticomplete
/// to the sets of already placed non-neighbors.
InducedMinorResult contains_induced_minor(const Graph& host, const Graph& pattern,
                                          const InducedMinorOptions& options = {});

}  // namespace lw
