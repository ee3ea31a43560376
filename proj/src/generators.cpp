#include "lw/generators.hpp"

#include <map>
#include <stdexcept>

#include "lw/errors.hpp"

namespace lw::gen {

Graph path(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle(Vertex n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(Vertex a, Vertex b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph::from_edges(a + b, edges);
}

Graph star(Vertex leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph wall(int k) {
  if (k < 2) throw GraphError("wall needs k >= 2");
  const int columns = 2 * k;
  std::map<std::pair<int, int>, Vertex> id;
  auto keep = [&](int row, int col) {
    if (row == 0) return col % 2 == 0 && col <= columns - 2;
    if (row == k - 1) return col % 2 == (k - 2) % 2;
    return true;
  };
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < columns; ++c)
      if (keep(r, c)) id.emplace(std::pair{r, c}, static_cast<Vertex>(id.size()));

  std::vector<Edge> edges;
  for (int r = 0; r < k; ++r) {
    Vertex prev = -1;
    for (int c = 0; c < columns; ++c) {
      auto it = id.find({r, c});
      if (it == id.end()) continue;
      if (prev >= 0) edges.emplace_back(prev, it->second);
      prev = it->second;
    }
  }
  for (int r = 0; r + 1 < k; ++r) {
    for (int c = r % 2; c < columns; c += 2) {
      auto up = id.find({r, c});
      auto down = id.find({r + 1, c});
      if (up != id.end() && down != id.end()) edges.emplace_back(up->second, down->second);
    }
  }
  return Graph::from_edges(static_cast<Vertex>(id.size()), edges);
}

Graph theta(const std::vector<int>& path_lengths) {
  std::vector<Edge> edges;
  Vertex next = 2;
  for (int len : path_lengths) {
    if (len < 2) throw GraphError("theta paths need length >= 2");
    Vertex prev = 0;
    for (int step = 1; step < len; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return Graph::from_edges(next, edges);
}

Graph subdivided_star(const std::vector<int>& legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int len : legs) {
    Vertex prev = 0;
    for (int step = 0; step < len; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edges(next, edges);
}

Graph random_gnp(Vertex n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_tree(Vertex n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace lw::gen
