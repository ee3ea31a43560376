#include "lw/weights.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "lw/errors.hpp"

namespace lw {

WeightFunction WeightFunction::uniform(Vertex n) {
  WeightFunction w;
  w.num.assign(n, 1);
  w.den = n > 0 ? static_cast<std::uint64_t>(n) : 1;
  return w;
}

WeightFunction WeightFunction::point(Vertex n, Vertex v) {
  if (v < 0 || v >= n) throw GraphError("weight point out of range");
  WeightFunction w;
  w.num.assign(n, 0);
  w.num[v] = 1;
  w.den = 1;
  return w;
}

std::uint64_t WeightFunction::total() const {
  std::uint64_t s = 0;
  for (auto x : num) s += x;
  return s;
}

std::uint64_t WeightFunction::sum(std::span<const Vertex> members) const {
  std::uint64_t s = 0;
  for (Vertex v : members) s += num[v];
  return s;
}

WeightFunction aggregate(const WeightFunction& w, std::span<const VertexSet> sets) {
  WeightFunction out;
  out.den = w.den;
  out.num.reserve(sets.size());
  for (const auto& s : sets) out.num.push_back(w.sum(s));
  return out;
}

std::string format_fraction(std::uint64_t num, std::uint64_t den) {
  const auto g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::uint64_t parse_unsigned(const std::string& text, int line) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError("line " + std::to_string(line) + ": expected an unsigned integer, got '" + text + "'");
  }
  std::uint64_t value = 0;
  for (char c : text) {
    if (__builtin_mul_overflow(value, 10u, &value) || __builtin_add_overflow(value, static_cast<unsigned>(c - '0'), &value)) {
      throw ParseError("line " + std::to_string(line) + ": integer too large");
    }
  }
  return value;
}

}  // namespace

WeightFunction parse_weights(std::istream& in, Vertex n) {
  struct Entry {
    Vertex v;
    std::uint64_t num, den;
  };
  std::vector<Entry> entries;
  std::vector<char> seen(n, 0);
  std::string raw;
  int line = 0;
  std::uint64_t common = 1;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream fields(raw);
    std::string id_text, frac;
    if (!(fields >> id_text) || id_text[0] == '#') continue;
    if (!(fields >> frac)) throw ParseError("line " + std::to_string(line) + ": missing weight");
    std::string extra;
    if (fields >> extra) throw ParseError("line " + std::to_string(line) + ": trailing text");
    const auto slash = frac.find('/');
    if (slash == std::string::npos) throw ParseError("line " + std::to_string(line) + ": weight must be <num>/<den>");
    const auto id = parse_unsigned(id_text, line);
    if (id >= static_cast<std::uint64_t>(n)) throw ParseError("line " + std::to_string(line) + ": vertex id out of range");
    const Vertex v = static_cast<Vertex>(id);
    if (seen[v]) throw ParseError("line " + std::to_string(line) + ": vertex " + std::to_string(v) + " listed twice");
    seen[v] = 1;
    auto num = parse_unsigned(frac.substr(0, slash), line);
    auto den = parse_unsigned(frac.substr(slash + 1), line);
    if (den == 0) throw ParseError("line " + std::to_string(line) + ": zero denominator");
    const auto g = std::gcd(num, den);
    num /= g;
    den /= g;
    const auto step = den / std::gcd(common, den);
    if (__builtin_mul_overflow(common, step, &common)) {
      throw ParseError("line " + std::to_string(line) + ": common denominator exceeds 64 bits");
    }
    entries.push_back({v, num, den});
  }

  WeightFunction w;
  w.num.assign(n, 0);
  w.den = common;
  std::uint64_t total = 0;
  for (const auto& e : entries) {
    std::uint64_t scaled = 0;
    if (__builtin_mul_overflow(e.num, common / e.den, &scaled) || __builtin_add_overflow(total, scaled, &total) ||
        total > common) {
      throw ParseError("weights total more than 1");
    }
    w.num[e.v] = scaled;
  }
  return w;
}

void write_weights(std::ostream& out, const WeightFunction& w) {
  for (Vertex v = 0; v < w.size(); ++v)
    if (w.num[v] != 0) out << v << ' ' << format_fraction(w.num[v], w.den) << '\n';
}

WeightFunction random_weights(Vertex n, std::mt19937_64& rng, double density) {
  WeightFunction w;
  w.num.assign(n, 0);
  if (n == 0) return w;
  std::bernoulli_distribution keep(density);
  std::uniform_int_distribution<std::uint64_t> value(0, 1000);
  for (auto& x : w.num)
    if (keep(rng)) x = value(rng);
  if (w.total() == 0) w.num[std::uniform_int_distribution<Vertex>(0, n - 1)(rng)] = 1;
  w.den = w.total();
  return w;
}

}  // namespace lw
