#include "lw/report.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <random>

#include "lw/errors.hpp"
#include "lw/minor_models.hpp"
#include "lw/separators.hpp"
#include "lw/series_parallel.hpp"
#include "lw/theta_tools.hpp"

namespace lw {

using Json = nlohmann::ordered_json;

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::falsified:
      return "falsified";
    case CheckStatus::budget_exceeded:
      return "budget_exceeded";
  }
  return "fail";
}

int Report::exit_code() const {
  bool budget = false;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail || c.status == CheckStatus::falsified) return 1;
    budget = budget || c.status == CheckStatus::budget_exceeded;
  }
  return budget ? 2 : 0;
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["tool"] = "lwcheck";
  j["version"] = std::string(kToolVersion);
  j["suite"] = suite;
  j["params"] = {{"k", params.k}, {"g", params.g}};
  j["seed"] = seed;
  j["samples"] = samples;
  j["budget"] = budget;
  Json list = Json::array();
  for (const auto& c : checks) {
    Json r;
    r["name"] = c.name;
    r["claim"] = c.claim;
    r["status"] = std::string(to_string(c.status));
    r["witness"] = c.witness;
    if (with_timing) r["ms"] = c.ms;
    list.push_back(std::move(r));
  }
  j["checks"] = std::move(list);
  j["exit_code"] = exit_code();
  return j;
}

std::uint64_t budget_from_env(std::uint64_t fallback) {
  const char* raw = std::getenv("LW_BUDGET");
  if (!raw || !*raw) return fallback;
  char* end = nullptr;
  const auto value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) return fallback;
  return value;
}

namespace {

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string vertex_name(const LayeredWheel& w, Vertex v) {
  auto c = w.coordinates(v);
  return "P_" + std::to_string(c.layer) + "^" + std::to_string(c.index);
}

Json vertex_names(const LayeredWheel& w, const LabeledSubgraph& h, const VertexSet& vs) {
  Json out = Json::array();
  for (Vertex v : vs) out.push_back(vertex_name(w, h.wheel_ids[v]));
  return out;
}

void construction_suite(const LayeredWheel& wheel, Report& report) {
  Timer timer;
  auto cr = verify_construction_invariants(wheel);
  const double each = timer.ms() / std::max<std::size_t>(cr.checks.size(), 1);
  for (const auto& c : cr.checks) {
    CheckRecord r{c.name, c.claim, c.passed ? CheckStatus::pass : CheckStatus::fail};
    if (!c.passed) r.witness["counterexample"] = c.counterexample;
    if (c.measured >= 0) r.witness["measured"] = c.measured;
    r.ms = each;
    report.checks.push_back(std::move(r));
  }
  Timer t2;
  auto cert = linear_clique_model(wheel);
  auto check = validate_model(wheel.graph(), cert.model, true, false);
  CheckRecord r{"clique_model", "V(P_1), ..., V(P_k) is a linear model of K_k",
                check.ok() ? CheckStatus::pass : CheckStatus::fail};
  r.witness["k"] = wheel.params().k;
  Json pairs = Json::array();
  for (const auto& w : cert.witnesses)
    pairs.push_back({{"i", w.i + 1}, {"j", w.j + 1}, {"edge", {vertex_name(wheel, w.edge.first), vertex_name(wheel, w.edge.second)}}});
  r.witness["edges"] = std::move(pairs);
  if (!check.ok()) r.witness["violated"] = std::string(to_string(check.violated)) + ": " + check.detail;
  r.ms = t2.ms();
  report.checks.push_back(std::move(r));
}

void series_parallel_suite(const LayeredWheel& wheel, const SuiteOptions& opt, Report& report) {
  static constexpr double kRates[] = {0.1, 0.3, 0.5};
  std::mt19937_64 rng(opt.seed);
  CheckRecord sp{"h_prime_series_parallel", "H' of every sampled induced subgraph H has treewidth at most 2"};
  CheckRecord cf{"c_of_F_series_parallel", "c(F) built with terminals for H = G - X is (s,t)-series-parallel"};
  CheckRecord props{"h_prime_properties", "off-big H' vertices have degree <= 2; big sets are >= 2^g/3 - 2 apart"};
  Timer t_sp, t_cf, t_props;
  double ms_sp = 0, ms_cf = 0, ms_props = 0;
  int checked = 0;
  for (int s = -1; s < opt.samples; ++s) {
    VertexSet keep = s < 0 ? VertexSet{} : sample_kept_vertices(wheel, kRates[s % 3], rng);
    if (s < 0)
      for (Vertex v = 0; v < wheel.graph().num_vertices(); ++v) keep.push_back(v);
    VertexSet removed;
    {
      std::vector<char> kept(wheel.graph().num_vertices(), 0);
      for (Vertex v : keep) kept[v] = 1;
      for (Vertex v = 0; v < wheel.graph().num_vertices(); ++v)
        if (!kept[v]) removed.push_back(v);
    }
    auto h = labeled_subgraph(wheel, keep);
    ++checked;

    Timer a;
    auto hp = contract_to_h_prime(h.graph, h.classes);
    auto res = is_series_parallel(hp.h_prime);
    if (!res.series_parallel && sp.status == CheckStatus::pass) {
      sp.status = CheckStatus::falsified;
      sp.witness["sample"] = s;
      sp.witness["core_size"] = res.core_vertices.size();
      sp.witness["removed"] = removed.size();
    }
    ms_sp += a.ms();

    Timer b;
    try {
      auto inst = terminal_instance(wheel, removed);
      auto c = c_of_F(inst.f, inst.paths);
      if (!c.series_parallel && cf.status == CheckStatus::pass) {
        cf.status = CheckStatus::falsified;
        cf.witness["sample"] = s;
      }
    } catch (const HypothesisError& e) {
      if (cf.status == CheckStatus::pass) {
        cf.status = CheckStatus::fail;
        cf.witness["sample"] = s;
        cf.witness["hypothesis"] = e.condition();
        cf.witness["detail"] = e.what();
      }
    }
    ms_cf += b.ms();

    Timer c;
    auto pr = verify_h_prime_properties(hp, wheel.params().g);
    for (const auto& chk : pr.checks) {
      if (!chk.passed && props.status == CheckStatus::pass) {
        props.status = CheckStatus::falsified;
        props.witness["sample"] = s;
        props.witness["check"] = chk.name;
        props.witness["detail"] = chk.detail;
      }
    }
    ms_props += c.ms();
  }
  for (auto* r : {&sp, &cf, &props}) r->witness["subgraphs"] = checked;
  sp.ms = ms_sp;
  cf.ms = ms_cf;
  props.ms = ms_props;
  report.checks.push_back(std::move(sp));
  report.checks.push_back(std::move(cf));
  report.checks.push_back(std::move(props));
}

void paths_suite(const LayeredWheel& wheel, const SuiteOptions& opt, Report& report) {
  const Graph& g = wheel.graph();
  Timer timer;
  CheckRecord r{"big_pair_path_families", "at most seven internally anticomplete paths join two big vertices"};
  VertexSet bigs;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    if (wheel.vertex_class(v) == VertexClass::big) bigs.push_back(v);
  Json pairs = Json::array();
  std::size_t largest = 0;
  bool budget = false;
  for (std::size_t i = 0; i < bigs.size(); ++i)
    for (std::size_t j = i + 1; j < bigs.size(); ++j) {
      auto res = max_anticomplete_path_family(g, bigs[i], bigs[j], 8, opt.budget);
      largest = std::max(largest, res.family.paths.size());
      budget = budget || !res.exhaustive;
      pairs.push_back({{"u", vertex_name(wheel, bigs[i])},
                       {"v", vertex_name(wheel, bigs[j])},
                       {"size", res.family.paths.size()},
                       {"exhaustive", res.exhaustive}});
    }
  if (largest >= 8) {
    r.status = CheckStatus::falsified;
  } else if (budget) {
    r.status = CheckStatus::budget_exceeded;
  }
  r.witness["pairs"] = std::move(pairs);
  r.witness["max_size"] = largest;
  r.witness["three_attained"] = largest >= 3;
  r.ms = timer.ms();
  report.checks.push_back(std::move(r));

  Timer t2;
  CheckRecord d{"degree_bound_families", "at most min(deg u, deg v) internally anticomplete u-v paths"};
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Vertex> pick(0, g.num_vertices() - 1);
  int tried = 0;
  for (int s = 0; s < opt.samples && g.num_vertices() > 1; ++s) {
    Vertex u = pick(rng);
    Vertex v = pick(rng);
    if (u == v) continue;
    ++tried;
    auto res = max_anticomplete_path_family(g, u, v, 8, opt.budget);
    const auto bound = std::min(g.degree(u), g.degree(v));
    if (res.family.paths.size() > bound && d.status == CheckStatus::pass) {
      d.status = CheckStatus::falsified;
      d.witness["u"] = vertex_name(wheel, u);
      d.witness["v"] = vertex_name(wheel, v);
    } else if (!res.exhaustive && d.status == CheckStatus::pass) {
      d.status = CheckStatus::budget_exceeded;
    }
  }
  d.witness["pairs"] = tried;
  d.ms = t2.ms();
  report.checks.push_back(std::move(d));
}

void separator_suite(const LayeredWheel& wheel, const SuiteOptions& opt, Report& report) {
  static constexpr double kRates[] = {0.0, 0.1, 0.3};
  static constexpr double kDensity[] = {1.0, 0.3, 0.05};
  std::mt19937_64 rng(opt.seed);
  CheckRecord bound{"separator_bound", "K is w-balanced in H and |K| <= 21 + 9 (width(H'') + 1)"};
  CheckRecord props{"h_prime_properties", "off-big H' vertices have degree <= 2; big sets are >= 2^g/3 - 2 apart"};
  CheckRecord theta{"high_degree_branch", "H'' has maximum degree < 9 or H has a (2^g - 1)-long theta"};
  Timer timer;
  int runs = 0, max_width = -1, heuristic = 0, high_degree = 0;
  std::size_t max_k = 0;
  for (int s = 0; s < opt.samples; ++s) {
    auto keep = sample_kept_vertices(wheel, kRates[s % 3], rng);
    auto w = random_weights(static_cast<Vertex>(keep.size()), rng, kDensity[(s / 3) % 3]);
    if (keep.empty()) continue;
    auto h = labeled_subgraph(wheel, keep);
    auto st = build_pipeline(h.graph, h.classes, w);
    ++runs;
    auto vr = verify_H_separator_bound(st);
    for (const auto& c : vr.checks) {
      if (!c.passed && bound.status == CheckStatus::pass) {
        bound.status = CheckStatus::falsified;
        bound.witness["sample"] = s;
        bound.witness["check"] = c.name;
        bound.witness["detail"] = c.detail;
        bound.witness["k"] = vertex_names(wheel, h, st.k);
      }
    }
    max_width = std::max(max_width, st.td_width);
    max_k = std::max(max_k, st.k.size());
    heuristic += st.td_exact ? 0 : 1;

    auto pr = verify_h_prime_properties(st.h_prime, wheel.params().g);
    for (const auto& c : pr.checks) {
      if (!c.passed && props.status == CheckStatus::pass) {
        props.status = CheckStatus::falsified;
        props.witness["sample"] = s;
        props.witness["detail"] = c.detail;
      }
    }
    auto lt = extract_long_theta_from_pipeline(st);
    if (lt.kind == LongThetaOutcome::Kind::theta) {
      ++high_degree;
      if (lt.theta->length < (1 << wheel.params().g) - 1 && theta.status == CheckStatus::pass) {
        theta.status = CheckStatus::falsified;
        theta.witness["sample"] = s;
        theta.witness["detail"] = "theta of length " + std::to_string(lt.theta->length);
      }
    } else if (lt.kind == LongThetaOutcome::Kind::falsified && theta.status == CheckStatus::pass) {
      ++high_degree;
      theta.status = CheckStatus::falsified;
      theta.witness["sample"] = s;
      theta.witness["detail"] = lt.detail;
    }
  }
  bound.witness["runs"] = runs;
  bound.witness["max_width"] = max_width;
  bound.witness["max_k"] = max_k;
  bound.witness["heuristic_decompositions"] = heuristic;
  props.witness["runs"] = runs;
  theta.witness["runs"] = runs;
  theta.witness["high_degree"] = high_degree;
  const double ms = timer.ms() / 3;
  bound.ms = props.ms = theta.ms = ms;
  report.checks.push_back(std::move(bound));
  report.checks.push_back(std::move(props));
  report.checks.push_back(std::move(theta));
}

Json theta_json(const LayeredWheel& wheel, const ThetaCertificate& t) {
  Json paths = Json::array();
  for (const auto& p : t.paths) {
    Json q = Json::array();
    for (Vertex v : p) q.push_back(vertex_name(wheel, v));
    paths.push_back(std::move(q));
  }
  return {{"a", vertex_name(wheel, t.a)}, {"b", vertex_name(wheel, t.b)}, {"length", t.length}, {"paths", paths}};
}

void theta_suite(const LayeredWheel& wheel, const SuiteOptions& opt, Report& report) {
  const Graph& g = wheel.graph();
  {
    Timer timer;
    CheckRecord r{"no_wide_theta_8", "no wide theta of width 8"};
    auto res = find_wide_theta(g, 8, opt.budget);
    if (res.status == SearchStatus::found) {
      r.status = CheckStatus::falsified;
      r.witness["a"] = vertex_name(wheel, res.theta->u);
      r.witness["b"] = vertex_name(wheel, res.theta->v);
    } else if (res.status == SearchStatus::budget_exceeded) {
      r.status = CheckStatus::budget_exceeded;
    }
    r.witness["nodes"] = res.nodes;
    r.ms = timer.ms();
    report.checks.push_back(std::move(r));
  }
  {
    Timer timer;
    CheckRecord r{"long_theta_crossing", "every order of a 4-long theta has the crossing pattern x1x3, x2x4"};
    auto res = find_long_theta(g, 4, opt.budget);
    r.witness["nodes"] = res.nodes;
    if (res.status == SearchStatus::budget_exceeded) {
      r.status = CheckStatus::budget_exceeded;
    } else if (res.status == SearchStatus::found) {
      r.witness["theta"] = theta_json(wheel, *res.theta);
      std::vector<Vertex> members;
      for (const auto& p : res.theta->paths) members.insert(members.end(), p.begin(), p.end());
      members = make_vertex_set(members);
      std::mt19937_64 rng(opt.seed);
      int orders = 0;
      for (int s = 0; s < opt.samples; ++s) {
        std::shuffle(members.begin(), members.end(), rng);
        ++orders;
        if (!crossing_witness(g, *res.theta, members)) {
          r.status = CheckStatus::falsified;
          Json order = Json::array();
          for (Vertex v : members) order.push_back(vertex_name(wheel, v));
          r.witness["order"] = std::move(order);
          break;
        }
      }
      r.witness["orders"] = orders;
    } else {
      r.witness["theta"] = nullptr;
    }
    r.ms = timer.ms();
    report.checks.push_back(std::move(r));
  }
}

}  // namespace

Report run_suite(const SuiteOptions& opt) {
  static const std::vector<std::string> kSuites{"construction", "series-parallel", "paths", "separator", "theta"};
  const bool all = opt.suite == "all";
  if (!all && std::find(kSuites.begin(), kSuites.end(), opt.suite) == kSuites.end()) {
    throw PreconditionError("unknown suite '" + opt.suite + "'");
  }
  auto wheel = build_layered_wheel(opt.params);
  Report report{opt.suite, opt.params, opt.seed, opt.samples, opt.budget, {}};
  if (all || opt.suite == "construction") construction_suite(wheel, report);
  if (all || opt.suite == "series-parallel") series_parallel_suite(wheel, opt, report);
  if (all || opt.suite == "paths") paths_suite(wheel, opt, report);
  if (all || opt.suite == "separator") separator_suite(wheel, opt, report);
  if (all || opt.suite == "theta") theta_suite(wheel, opt, report);
  return report;
}

}  // namespace lw
