#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lw/graph.hpp"

namespace lw {

/// Exact nonnegative vertex weights num[v] / den over one common denominator.
struct WeightFunction {
  std::vector<std::uint64_t> num;
  std::uint64_t den = 1;

  static WeightFunction uniform(Vertex n);
  /// Weight 1 on v, 0 elsewhere.
  static WeightFunction point(Vertex n, Vertex v);

  Vertex size() const { return static_cast<Vertex>(num.size()); }
  std::uint64_t total() const;
  /// total <= 1
  bool weak() const { return total() <= den; }
  /// total == 1
  bool proper() const { return total() == den; }

  std::uint64_t sum(std::span<const Vertex> members) const;
  /// Exact test of s / den <= 1/2.
  bool at_most_half(std::uint64_t s) const { return s <= den - s; }
};

/// w'(X) = sum of w over X, one entry per branch set.
WeightFunction aggregate(const WeightFunction& w, std::span<const VertexSet> sets);

/// Text format: one line `<vertex-id> <num>/<den>` per vertex, omitted
/// vertices weigh 0. Blank lines and lines starting with '#' are skipped.
/// Rejects ids out of [0, n), repeated ids, zero denominators, totals above 1
/// and denominators whose common multiple does not fit in 64 bits.
WeightFunction parse_weights(std::istream& in, Vertex n);
/// Writes reduced fractions, one line per vertex of nonzero weight.
void write_weights(std::ostream& out, const WeightFunction& w);

/// A seeded proper weight function. Each vertex gets an integer in [0, 1000]
/// with probability `density`, zero otherwise; at least one vertex is
/// positive and the denominator is the total.
WeightFunction random_weights(Vertex n, std::mt19937_64& rng, double density = 1.0);

std::string format_fraction(std::uint64_t num, std::uint64_t den);

}  // namespace lw
