#include "lw/minor_models.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "lw/errors.hpp"
#include "lw/generators.hpp"

namespace lw {

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none:
      return "none";
    case SearchStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "none";
}

std::string_view to_string(ModelCondition c) {
  switch (c) {
    case ModelCondition::ok:
      return "ok";
    case ModelCondition::out_of_range:
      return "out_of_range";
    case ModelCondition::size_mismatch:
      return "size_mismatch";
    case ModelCondition::connected:
      return "connected";
    case ModelCondition::disjoint:
      return "disjoint";
    case ModelCondition::edges:
      return "edges";
    case ModelCondition::linear:
      return "linear";
    case ModelCondition::induced:
      return "induced";
  }
  return "ok";
}

namespace {

ModelCheck violation(ModelCondition c, int i, int j, std::string detail) { return {c, i, j, std::move(detail)}; }

}  // namespace

ModelCheck validate_model(const Graph& host, const Model& model, bool require_linear, bool require_induced) {
  const auto& sets = model.branch_sets;
  const int n = static_cast<int>(sets.size());
  if (n != model.pattern.num_vertices()) {
    return violation(ModelCondition::size_mismatch, -1, -1, "pattern has " + std::to_string(model.pattern.num_vertices()) +
                                                                 " vertices, model has " + std::to_string(n) + " sets");
  }
  for (int i = 0; i < n; ++i)
    for (Vertex v : sets[i])
      if (!host.contains(v)) return violation(ModelCondition::out_of_range, i, -1, "vertex " + std::to_string(v));

  for (int i = 0; i < n; ++i) {
    VertexSet s = make_vertex_set(sets[i]);
    if (s.empty() || !is_connected_subset(host, s)) {
      return violation(ModelCondition::connected, i, -1, "branch set " + std::to_string(i) + " is empty or disconnected");
    }
  }

  std::vector<int> owner(host.num_vertices(), -1);
  for (int i = 0; i < n; ++i) {
    for (Vertex v : sets[i]) {
      if (owner[v] != -1 && owner[v] != i) {
        return violation(ModelCondition::disjoint, owner[v], i, "vertex " + std::to_string(v) + " is shared");
      }
      owner[v] = i;
    }
  }

  // Which pairs of sets are joined by a host edge.
  std::vector<std::vector<char>> touching(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (Vertex v : sets[i])
      for (Vertex w : host.neighbors(v))
        if (owner[w] >= 0 && owner[w] != i) touching[i][owner[w]] = 1;

  for (auto [i, j] : model.pattern.edges()) {
    if (!touching[i][j]) {
      return violation(ModelCondition::edges, i, j, "pattern edge without a host edge between the branch sets");
    }
  }
  if (require_linear) {
    for (int i = 0; i < n; ++i) {
      if (!induces_path(host, make_vertex_set(sets[i]))) {
        return violation(ModelCondition::linear, i, -1, "branch set " + std::to_string(i) + " does not induce a path");
      }
    }
  }
  if (require_induced) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (touching[i][j] && !model.pattern.has_edge(i, j)) {
          return violation(ModelCondition::induced, i, j, "pattern non-edge between adjacent branch sets");
        }
  }
  return {};
}

ContractedModel contract_model(const Graph& host, std::span<const VertexSet> branch_sets, bool complete_cover) {
  ContractedModel out;
  out.owner.assign(host.num_vertices(), -1);
  for (std::size_t i = 0; i < branch_sets.size(); ++i) {
    VertexSet s = make_vertex_set(branch_sets[i]);
    if (s.empty()) throw ModelError("branch set " + std::to_string(i) + " is empty");
    for (Vertex v : s) {
      if (!host.contains(v)) throw ModelError("vertex " + std::to_string(v) + " out of range");
      if (out.owner[v] != -1) {
        throw ModelError("branch sets " + std::to_string(out.owner[v]) + " and " + std::to_string(i) +
                         " overlap at vertex " + std::to_string(v));
      }
      out.owner[v] = static_cast<Vertex>(i);
    }
    if (!is_connected_subset(host, s)) throw ModelError("branch set " + std::to_string(i) + " is disconnected");
    out.branch_sets.push_back(std::move(s));
  }
  if (complete_cover) {
    for (Vertex v = 0; v < host.num_vertices(); ++v) {
      if (out.owner[v] == -1) {
        out.owner[v] = static_cast<Vertex>(out.branch_sets.size());
        out.branch_sets.push_back({v});
      }
    }
  }
  std::vector<Edge> edges;
  for (auto [u, v] : host.edges()) {
    Vertex a = out.owner[u];
    Vertex b = out.owner[v];
    if (a >= 0 && b >= 0 && a != b) edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  out.graph = Graph::from_edges(static_cast<Vertex>(out.branch_sets.size()), edges);
  return out;
}

CliqueModelCertificate linear_clique_model(const LayeredWheel& wheel) {
  const auto& p = wheel.params();
  CliqueModelCertificate cert;
  for (int layer = 1; layer <= p.k; ++layer) cert.model.branch_sets.push_back(wheel.layer_path(layer));
  cert.model.pattern = gen::complete(p.k);
  for (int i = 1; i <= p.k; ++i) {
    const std::int64_t x = std::int64_t{1} << (p.k - i + p.g);
    for (int j = i + 1; j <= p.k; ++j) cert.witnesses.push_back({i - 1, j - 1, {wheel.id(i, x), wheel.id(j, x)}});
  }
  return cert;
}

namespace {

using Mask = std::uint64_t;

inline Mask bit(Vertex v) { return Mask{1} << v; }

class InducedMinorSearch {
 public:
  InducedMinorSearch(const Graph& host, const Graph& pattern, std::uint64_t budget)
      : host_(host), pattern_(pattern), budget_(budget) {
    const Vertex n = host.num_vertices();
    all_ = n == 64 ? ~Mask{0} : (bit(n) - 1);
    nbr_.resize(n);
    for (Vertex v = 0; v < n; ++v)
      for (Vertex w : host.neighbors(v)) nbr_[v] |= bit(w);

    order_.resize(pattern.num_vertices());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return pattern.degree(a) > pattern.degree(b); });
    sets_.assign(pattern.num_vertices(), 0);
  }

  InducedMinorResult run() {
    InducedMinorResult result;
    const bool found = place(0);
    result.nodes = nodes_;
    if (found) {
      result.status = SearchStatus::found;
      Model m;
      m.pattern = pattern_;
      for (Mask s : sets_) {
        VertexSet members;
        for (Mask r = s; r; r &= r - 1) members.push_back(static_cast<Vertex>(std::countr_zero(r)));
        m.branch_sets.push_back(std::move(members));
      }
      result.model = std::move(m);
    } else {
      result.status = exhausted_budget_ ? SearchStatus::budget_exceeded : SearchStatus::none;
    }
    return result;
  }

 private:
  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (Mask r = s; r; r &= r - 1) out |= nbr_[std::countr_zero(r)];
    return out & ~s;
  }

  bool place(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex p = order_[depth];
    Mask used = 0;
    Mask avail = all_;
    std::vector<Mask> must_touch;
    for (std::size_t d = 0; d < depth; ++d) {
      const Vertex q = order_[d];
      used |= sets_[q];
      if (pattern_.has_edge(p, q)) {
        must_touch.push_back(neighborhood(sets_[q]));
      } else {
        avail &= ~neighborhood(sets_[q]);
      }
    }
    avail &= ~used;

    for (Mask rest = avail; rest; rest &= rest - 1) {
      const Vertex v = static_cast<Vertex>(std::countr_zero(rest));
      const Mask forbidden = bit(v) | (bit(v) - 1);
      const Mask cand = nbr_[v] & avail & ~forbidden;
      if (enumerate(p, depth, avail, must_touch, bit(v), cand, forbidden)) return true;
      if (exhausted_budget_) return false;
    }
    return false;
  }

  // Visits every connected subset of `avail` that contains `current` and whose
  // minimum is the seed vertex, each exactly once.
  bool enumerate(Vertex p, std::size_t depth, Mask avail, const std::vector<Mask>& must_touch, Mask current,
                 Mask cand, Mask forbidden) {
    if (++nodes_ > budget_) {
      exhausted_budget_ = true;
      return false;
    }
    bool touches = true;
    for (Mask t : must_touch) touches = touches && (current & t);
    if (touches) {
      sets_[p] = current;
      if (place(depth + 1)) return true;
      sets_[p] = 0;
      if (exhausted_budget_) return false;
    }
    while (cand) {
      const Mask w = cand & -cand;
      cand &= ~w;
      forbidden |= w;
      const Mask next = cand | (nbr_[std::countr_zero(w)] & avail & ~forbidden & ~current);
      if (enumerate(p, depth, avail, must_touch, current | w, next, forbidden)) return true;
      if (exhausted_budget_) return false;
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_budget_ = false;
  Mask all_ = 0;
  std::vector<Mask> nbr_;
  std::vector<Vertex> order_;
  std::vector<Mask> sets_;
};

}  // namespace

InducedMinorResult contains_induced_minor(const Graph& host, const Graph& pattern, const InducedMinorOptions& options) {
  if (host.num_vertices() > std::min<Vertex>(options.max_host_vertices, 64)) {
    throw CapExceeded("induced-minor search: host has " + std::to_string(host.num_vertices()) + " vertices");
  }
  if (pattern.num_vertices() > options.max_pattern_vertices) {
    throw CapExceeded("induced-minor search: pattern has " + std::to_string(pattern.num_vertices()) + " vertices");
  }
  auto result = InducedMinorSearch(host, pattern, options.budget).run();
  if (result.model) {
    auto check = validate_model(host, *result.model, false, true);
    if (!check.ok()) throw std::logic_error("induced-minor search produced an invalid model: " + check.detail);
  }
  return result;
}

}  // namespace lw
