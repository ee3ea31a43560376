#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lw/graph.hpp"
#include "lw/layered_wheel.hpp"

namespace lw {

enum class GraphFormat : std::uint8_t { edgelist, dimacs, dot, json };
std::string_view to_string(GraphFormat f);
GraphFormat graph_format_from_string(std::string_view name);

struct VertexLabel {
  int layer = 0;
  std::int64_t index = 0;
  VertexClass cls = VertexClass::small;

  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

std::vector<VertexLabel> wheel_labels(const LayeredWheel& wheel);

struct GraphFile {
  Graph graph;
  /// Present only for JSON input that carries labels for every vertex.
  std::optional<std::vector<VertexLabel>> labels;
};

/// edgelist: `n m`, then `u v` per edge (0-based, u < v, sorted).
/// dimacs:   `p edge n m`, then `e i j` per edge (1-based).
/// dot:      `graph G {`, one `  v;` per vertex, one `  u -- v;` per edge, `}`.
/// json:     {"n":..,"edges":[[u,v],..],"labels":{"id":{"layer","index","class"}}}.
/// Labels are only written in JSON.
void write_graph(std::ostream& out, const Graph& g, GraphFormat format, const std::vector<VertexLabel>* labels = nullptr);
std::string graph_to_string(const Graph& g, GraphFormat format, const std::vector<VertexLabel>* labels = nullptr);

/// '{' starts JSON, a leading `p` or `c` line DIMACS, the keyword `graph`
/// DOT; anything else is read as an edge list.
GraphFormat detect_format(std::string_view text);

/// Throws ParseError on malformed text and GraphError on invalid graphs.
GraphFile read_graph(std::string_view text, std::optional<GraphFormat> format = std::nullopt);
GraphFile read_graph_file(const std::string& path, std::optional<GraphFormat> format = std::nullopt);

}  // namespace lw
