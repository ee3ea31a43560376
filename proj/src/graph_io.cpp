#include "lw/graph_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "lw/errors.hpp"

namespace lw {

std::string_view to_string(GraphFormat f) {
  switch (f) {
    case GraphFormat::edgelist:
      return "edgelist";
    case GraphFormat::dimacs:
      return "dimacs";
    case GraphFormat::dot:
      return "dot";
    case GraphFormat::json:
      return "json";
  }
  return "edgelist";
}

GraphFormat graph_format_from_string(std::string_view name) {
  if (name == "edgelist") return GraphFormat::edgelist;
  if (name == "dimacs") return GraphFormat::dimacs;
  if (name == "dot") return GraphFormat::dot;
  if (name == "json") return GraphFormat::json;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

std::vector<VertexLabel> wheel_labels(const LayeredWheel& wheel) {
  std::vector<VertexLabel> labels;
  labels.reserve(wheel.graph().num_vertices());
  for (Vertex v = 0; v < wheel.graph().num_vertices(); ++v) {
    auto c = wheel.coordinates(v);
    labels.push_back({c.layer, c.index, wheel.vertex_class(v)});
  }
  return labels;
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format, const std::vector<VertexLabel>* labels) {
  const auto edges = g.edges();
  switch (format) {
    case GraphFormat::edgelist:
      out << g.num_vertices() << ' ' << edges.size() << '\n';
      for (auto [u, v] : edges) out << u << ' ' << v << '\n';
      break;
    case GraphFormat::dimacs:
      out << "p edge " << g.num_vertices() << ' ' << edges.size() << '\n';
      for (auto [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
      break;
    case GraphFormat::dot:
      out << "graph G {\n";
      for (Vertex v = 0; v < g.num_vertices(); ++v) out << "  " << v << ";\n";
      for (auto [u, v] : edges) out << "  " << u << " -- " << v << ";\n";
      out << "}\n";
      break;
    case GraphFormat::json: {
      nlohmann::ordered_json j;
      j["n"] = g.num_vertices();
      auto list = nlohmann::ordered_json::array();
      for (auto [u, v] : edges) list.push_back({u, v});
      j["edges"] = std::move(list);
      if (labels) {
        if (static_cast<Vertex>(labels->size()) != g.num_vertices()) throw GraphError("label count differs from vertex count");
        nlohmann::ordered_json l = nlohmann::ordered_json::object();
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
          const auto& lab = (*labels)[v];
          l[std::to_string(v)] = {{"layer", lab.layer}, {"index", lab.index}, {"class", std::string(to_string(lab.cls))}};
        }
        j["labels"] = std::move(l);
      }
      out << j.dump() << '\n';
      break;
    }
  }
}

std::string graph_to_string(const Graph& g, GraphFormat format, const std::vector<VertexLabel>* labels) {
  std::ostringstream out;
  write_graph(out, g, format, labels);
  return out.str();
}

GraphFormat detect_format(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) return GraphFormat::edgelist;
  if (text[i] == '{') return GraphFormat::json;
  if ((text[i] == 'p' || text[i] == 'c') && i + 1 < text.size() && std::isspace(static_cast<unsigned char>(text[i + 1]))) {
    return GraphFormat::dimacs;
  }
  if (text.substr(i).starts_with("graph") || text.substr(i).starts_with("strict")) return GraphFormat::dot;
  return GraphFormat::edgelist;
}

namespace {

long long to_int(std::string_view token, int line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line) + ": expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

Vertex checked_count(long long n, int line) {
  if (n < 0 || n > std::numeric_limits<Vertex>::max()) throw ParseError("line " + std::to_string(line) + ": bad vertex count");
  return static_cast<Vertex>(n);
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

GraphFile read_edgelist(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  Vertex n = -1;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    auto t = split(raw);
    if (t.empty() || t[0][0] == '#') continue;
    if (t.size() != 2) throw ParseError("line " + std::to_string(line) + ": expected two integers");
    if (n < 0) {
      n = checked_count(to_int(t[0], line), line);
      m = to_int(t[1], line);
      continue;
    }
    edges.emplace_back(static_cast<Vertex>(to_int(t[0], line)), static_cast<Vertex>(to_int(t[1], line)));
  }
  if (n < 0) throw ParseError("missing `n m` header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return {Graph::from_edges(n, edges), std::nullopt};
}

GraphFile read_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  Vertex n = -1;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, raw)) {
    ++line;
    auto t = split(raw);
    if (t.empty() || t[0] == "c") continue;
    if (t[0] == "p") {
      if (n >= 0) throw ParseError("line " + std::to_string(line) + ": second problem line");
      if (t.size() != 4 || (t[1] != "edge" && t[1] != "col")) throw ParseError("line " + std::to_string(line) + ": bad problem line");
      n = checked_count(to_int(t[2], line), line);
      m = to_int(t[3], line);
    } else if (t[0] == "e") {
      if (n < 0) throw ParseError("line " + std::to_string(line) + ": edge before problem line");
      if (t.size() != 3) throw ParseError("line " + std::to_string(line) + ": bad edge line");
      edges.emplace_back(static_cast<Vertex>(to_int(t[1], line) - 1), static_cast<Vertex>(to_int(t[2], line) - 1));
    } else {
      throw ParseError("line " + std::to_string(line) + ": unknown line type '" + t[0] + "'");
    }
  }
  if (n < 0) throw ParseError("missing problem line");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("problem line announces " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return {Graph::from_edges(n, edges), std::nullopt};
}

// Accepts the subset written by write_graph: integer node statements and
// `u -- v` edge statements, optionally with attribute lists.
GraphFile read_dot(std::string_view text) {
  std::string body(text);
  const auto open = body.find('{');
  const auto close = body.rfind('}');
  if (open == std::string::npos || close == std::string::npos || close < open) throw ParseError("dot: missing braces");
  body = body.substr(open + 1, close - open - 1);
  std::vector<Edge> edges;
  Vertex n = 0;
  std::istringstream in(body);
  std::string stmt;
  int index = 0;
  while (std::getline(in, stmt, ';')) {
    ++index;
    if (auto bracket = stmt.find('['); bracket != std::string::npos) stmt = stmt.substr(0, bracket);
    auto t = split(stmt);
    if (t.empty()) continue;
    if (t.size() == 1) {
      n = std::max<Vertex>(n, static_cast<Vertex>(to_int(t[0], index)) + 1);
    } else if (t.size() == 3 && t[1] == "--") {
      const auto u = static_cast<Vertex>(to_int(t[0], index));
      const auto v = static_cast<Vertex>(to_int(t[2], index));
      n = std::max({n, u + 1, v + 1});
      edges.emplace_back(u, v);
    } else {
      throw ParseError("dot: unsupported statement '" + stmt + "'");
    }
  }
  return {Graph::from_edges(n, edges), std::nullopt};
}

GraphFile read_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
  try {
    const auto n = checked_count(j.at("n").get<long long>(), 1);
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("json: every edge must be a pair");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    GraphFile out{Graph::from_edges(n, edges), std::nullopt};
    if (j.contains("labels")) {
      std::vector<VertexLabel> labels(n);
      std::vector<char> seen(n, 0);
      for (const auto& [key, value] : j.at("labels").items()) {
        const auto v = to_int(key, 1);
        if (v < 0 || v >= n) throw ParseError("json: label for vertex " + key + " out of range");
        labels[v] = {value.at("layer").get<int>(), value.at("index").get<std::int64_t>(),
                     vertex_class_from_string(value.at("class").get<std::string>())};
        seen[v] = 1;
      }
      for (Vertex v = 0; v < n; ++v)
        if (!seen[v]) throw ParseError("json: vertex " + std::to_string(v) + " has no label");
      out.labels = std::move(labels);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("json: ") + e.what());
  }
}

}  // namespace

GraphFile read_graph(std::string_view text, std::optional<GraphFormat> format) {
  switch (format.value_or(detect_format(text))) {
    case GraphFormat::edgelist:
      return read_edgelist(text);
    case GraphFormat::dimacs:
      return read_dimacs(text);
    case GraphFormat::dot:
      return read_dot(text);
    case GraphFormat::json:
      return read_json(text);
  }
  return read_edgelist(text);
}

GraphFile read_graph_file(const std::string& path, std::optional<GraphFormat> format) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return read_graph(buffer.str(), format);
}

}  // namespace lw
