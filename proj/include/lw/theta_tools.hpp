#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lw/graph.hpp"
#include "lw/minor_models.hpp"
#include "lw/separators.hpp"

namespace lw {

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Ends a, b and three a-b paths, each listed from a to b.
struct ThetaCertificate {
  Vertex a = -1;
  Vertex b = -1;
  std::array<std::vector<Vertex>, 3> paths;
  /// Distance from a to b inside the theta, i.e. the shortest path length.
  int length = 0;
};

/// Why `t` is not an induced theta of `g` with the claimed length, or nullopt.
std::optional<std::string> validate_theta(const Graph& g, const ThetaCertificate& t);

/// Induced u-v paths whose interiors are pairwise anticomplete.
struct PathFamily {
  Vertex u = -1;
  Vertex v = -1;
  std::vector<std::vector<Vertex>> paths;
};

std::optional<std::string> validate_path_family(const Graph& g, const PathFamily& family);

struct ThetaSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<ThetaCertificate> theta;
  std::uint64_t nodes = 0;
};

/// Searches every non-adjacent pair a < b (both of degree >= 3) for three
/// internally anticomplete induced paths of length >= `min_length` each.
/// The budget counts path extensions over the whole search.
ThetaSearchResult find_long_theta(const Graph& g, int min_length, std::uint64_t budget = kDefaultSearchBudget);

struct PathFamilyResult {
  PathFamily family;
  /// True when the search space was exhausted, so the family is maximum
  /// (or reached the cap).
  bool exhaustive = false;
  SearchStatus status = SearchStatus::none;
  std::uint64_t nodes = 0;
};

/// Largest family of pairwise internally anticomplete induced u-v paths, up
/// to `cap`. Paths are ordered by their first interior vertex; each partial
/// family is pruned by a vertex-disjoint-path (max-flow) bound on the
/// vertices it leaves free.
PathFamilyResult max_anticomplete_path_family(const Graph& g, Vertex u, Vertex v, int cap = 8,
                                              std::uint64_t budget = kDefaultSearchBudget);

struct WideThetaResult {
  SearchStatus status = SearchStatus::none;
  std::optional<PathFamily> theta;
  std::uint64_t nodes = 0;
};

/// Two non-adjacent ends joined by `width` internally anticomplete induced
/// paths (which then induce exactly the wide theta).
WideThetaResult find_wide_theta(const Graph& g, int width, std::uint64_t budget = kDefaultSearchBudget);

/// x1 < x2 < x3 < x4 in the order with exactly the edges x1x3 and x2x4.
struct CrossingWitness {
  std::array<Vertex, 4> x;
};

/// Scans all pairs of theta edges for the crossing pattern under `order`
/// (a permutation of the theta's vertices, host ids). nullopt means no
/// witness exists, a falsification. Throws PreconditionError for thetas of
/// length below 4 or when `order` is not a permutation of V(T).
std::optional<CrossingWitness> crossing_witness(const Graph& host, const ThetaCertificate& t,
                                                std::span<const Vertex> order);

/// The same scan on a graph given directly, `order` over all its vertices.
std::optional<CrossingWitness> crossing_witness(const Graph& t, std::span<const Vertex> order);

struct AllOrdersResult {
  /// Orders covered, counted with multiplicity for pruned subtrees.
  std::uint64_t orders = 0;
  /// Distinct prefixes visited.
  std::uint64_t prefixes = 0;
  /// An order without a witness, if one exists.
  std::optional<std::vector<Vertex>> counterexample;
};

/// Checks every vertex order of `t`: a prefix that already holds the pattern
/// settles all of its completions. Intended for at most 20 vertices.
AllOrdersResult crossing_witness_all_orders(const Graph& t);

enum class ConnectorOutcome : std::uint8_t { path_or_hole, tripod, unclassified };
std::string_view to_string(ConnectorOutcome o);

struct ConnectorResult {
  /// Inclusion-minimal connected F avoiding v1, v2, v3 and meeting all three
  /// neighborhoods.
  VertexSet f;
  bool minimal = false;
  ConnectorOutcome outcome = ConnectorOutcome::unclassified;
  /// Tripod: center a and paths P_i from a to v_i.
  Vertex center = -1;
  std::array<std::vector<Vertex>, 3> legs;
  /// Path or hole: indices {i, j, k} of v1..v3 (0-based), path from v_i to v_j.
  std::array<int, 3> ijk{-1, -1, -1};
  std::vector<Vertex> path;
  bool hole = false;
  std::string detail;
};

/// Starts from the first component of T - {v1, v2, v3} that sees all three,
/// prunes leaves that are not a terminal's last contact, then deletes
/// greedily (smallest id first, repeated to a fixpoint). Ends with a
/// single-deletion certificate of minimality and the classification into a
/// tripod or a path/hole. Throws PreconditionError on a triangle, repeated
/// or invalid terminals, or when no such component exists.
ConnectorResult minimal_connector(const Graph& t, Vertex v1, Vertex v2, Vertex v3);

struct LongThetaOutcome {
  enum class Kind : std::uint8_t { degree_bound_holds, theta, falsified };
  Kind kind = Kind::degree_bound_holds;
  int max_degree = 0;
  std::optional<ThetaCertificate> theta;
  /// H vertices n1, n2, n3 and the connector used.
  std::array<Vertex, 3> terminals{-1, -1, -1};
  Vertex big = -1;
  std::string detail;
};
std::string_view to_string(LongThetaOutcome::Kind k);

/// If H'' has maximum degree below 9, reports that. Otherwise picks the first
/// D of degree >= 9, a big vertex with three medium neighbors next to D, runs
/// the connector inside D and turns a tripod into a theta with ends a and b,
/// validated in H. A path/hole outcome or an invalid theta is a falsification.
LongThetaOutcome extract_long_theta_from_pipeline(const SeparatorPipelineState& state);

}  // namespace lw
