#pragma once

#include <random>
#include <vector>

#include "lw/graph.hpp"

// Small named graphs used as test vectors and CLI fixtures.
namespace lw::gen {

Graph path(Vertex n);
Graph cycle(Vertex n);
Graph complete(Vertex n);
Graph complete_bipartite(Vertex a, Vertex b);
Graph star(Vertex leaves);

/// The (k x k)-wall, k >= 2: k rows, the middle rows carrying 2k vertices,
/// top and bottom rows with their degree-<=2 corners dissolved.
Graph wall(int k);

/// Two ends (ids 0 and 1) joined by internally disjoint paths with the given
/// lengths (each >= 2). Three lengths give a theta; more give a wide theta.
Graph theta(const std::vector<int>& path_lengths);

/// Each leg i is a path of `legs[i]` edges from the center (id 0).
Graph subdivided_star(const std::vector<int>& legs);

Graph random_gnp(Vertex n, double p, std::mt19937_64& rng);
Graph random_tree(Vertex n, std::mt19937_64& rng);

}  // namespace lw::gen
