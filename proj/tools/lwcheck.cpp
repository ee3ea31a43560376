#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lw/errors.hpp"
#include "lw/graph_io.hpp"
#include "lw/layered_wheel.hpp"
#include "lw/report.hpp"
#include "lw/separators.hpp"
#include "lw/theta_tools.hpp"
#include "lw/treewidth.hpp"
#include "lw/weights.hpp"

namespace {

using Json = nlohmann::ordered_json;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lw::Error("cannot write '" + path + "'");
  out << text;
}

int cmd_gen(int k, int g, const std::string& out, const std::string& format) {
  auto wheel = lw::build_layered_wheel({g, k});
  const auto fmt = lw::graph_format_from_string(format);
  const auto labels = lw::wheel_labels(wheel);
  write_text(out, lw::graph_to_string(wheel.graph(), fmt, &labels));
  return 0;
}

int cmd_verify(const lw::SuiteOptions& options, const std::string& report_path) {
  auto report = lw::run_suite(options);
  const auto j = report.to_json();
  if (!report_path.empty()) write_text(report_path, j.dump(2) + "\n");
  for (const auto& c : report.checks) std::cout << lw::to_string(c.status) << "  " << c.name << '\n';
  return report.exit_code();
}

int cmd_tw(const std::string& in, const std::string& mode) {
  const auto file = lw::read_graph_file(in);
  if (mode == "exact") {
    auto res = lw::exact_treewidth(file.graph);
    std::cout << res.width << '\n';
  } else if (mode == "upper") {
    std::cout << lw::min_fill_decomposition(file.graph).width() << '\n';
  } else {
    std::cout << lw::treewidth_lower_bound(file.graph) << '\n';
  }
  return 0;
}

Json as_json(const lw::VertexSet& s) {
  Json out = Json::array();
  for (auto v : s) out.push_back(v);
  return out;
}

int cmd_separator(const std::string& in, const std::string& weights_path, const std::string& report_path) {
  const auto file = lw::read_graph_file(in);
  if (!file.labels) throw lw::ParseError("separator needs a JSON graph with vertex labels");
  std::vector<lw::VertexClass> classes;
  for (const auto& l : *file.labels) classes.push_back(l.cls);
  std::ifstream win(weights_path);
  if (!win) throw lw::ParseError("cannot open '" + weights_path + "'");
  const auto w = lw::parse_weights(win, file.graph.num_vertices());
  const auto st = lw::build_pipeline(file.graph, classes, w);
  const auto rep = lw::verify_H_separator_bound(st);

  Json j;
  j["tool"] = "lwcheck";
  j["version"] = std::string(lw::kToolVersion);
  j["n"] = file.graph.num_vertices();
  j["k_prime_found"] = st.k_prime_found;
  j["k_prime"] = as_json(st.k_prime);
  j["h_dprime_vertices"] = st.h_dprime.num_vertices();
  j["td_width"] = st.td_width;
  j["td_exact"] = st.td_exact;
  j["separator"] = as_json(st.k);
  Json checks = Json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name}, {"claim", c.claim}, {"status", c.passed ? "pass" : "falsified"}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  const auto text = j.dump(2) + "\n";
  if (report_path.empty()) {
    std::cout << text;
  } else {
    write_text(report_path, text);
    std::cout << (rep.all_passed() ? "pass" : "falsified") << "  |K| = " << st.k.size() << '\n';
  }
  return rep.all_passed() ? 0 : 1;
}

int cmd_theta(const std::string& in, int min_length) {
  const auto file = lw::read_graph_file(in);
  auto res = lw::find_long_theta(file.graph, min_length, lw::budget_from_env(lw::kDefaultSearchBudget));
  if (res.status == lw::SearchStatus::budget_exceeded) {
    std::cerr << "search budget exhausted after " << res.nodes << " nodes\n";
    return 2;
  }
  if (!res.theta) {
    std::cout << "none\n";
    return 0;
  }
  const auto& t = *res.theta;
  Json j;
  j["a"] = t.a;
  j["b"] = t.b;
  j["length"] = t.length;
  Json paths = Json::array();
  for (const auto& p : t.paths) paths.push_back(p);
  j["paths"] = std::move(paths);
  std::cout << j.dump() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Layered wheel construction and certificate checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(lw::kToolVersion));

  int k = 1, g = 1;
  std::string out, format = "edgelist";
  auto* gen = app.add_subcommand("gen", "write G_k^g");
  gen->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  gen->add_option("--g", g)->required()->check(CLI::PositiveNumber);
  gen->add_option("--out", out, "output file (stdout if omitted)");
  gen->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dimacs", "dot", "json"}));

  lw::SuiteOptions suite;
  std::string report;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--k", suite.params.k)->required()->check(CLI::PositiveNumber);
  verify->add_option("--g", suite.params.g)->required()->check(CLI::PositiveNumber);
  verify->add_option("--suite", suite.suite)
      ->check(CLI::IsMember({"construction", "series-parallel", "paths", "separator", "theta", "all"}));
  verify->add_option("--seed", suite.seed);
  verify->add_option("--samples", suite.samples)->check(CLI::NonNegativeNumber);
  verify->add_option("--report", report, "report JSON path");

  std::string in, mode = "exact";
  auto* tw = app.add_subcommand("tw", "treewidth of a graph file");
  tw->add_option("--in", in)->required();
  tw->add_option("--mode", mode)->check(CLI::IsMember({"exact", "upper", "lower"}));

  std::string weights;
  auto* sep = app.add_subcommand("separator", "balanced separator pipeline on a labeled subgraph");
  sep->add_option("--in", in)->required();
  sep->add_option("--weights", weights)->required();
  sep->add_option("--report", report);

  int min_length = 2;
  auto* theta = app.add_subcommand("theta", "search for a long theta");
  theta->add_option("--in", in)->required();
  theta->add_option("--min-length", min_length)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(k, g, out, format);
    if (*verify) {
      suite.budget = lw::budget_from_env(suite.budget);
      return cmd_verify(suite, report);
    }
    if (*tw) return cmd_tw(in, mode);
    if (*sep) return cmd_separator(in, weights, report);
    if (*theta) return cmd_theta(in, min_length);
  } catch (const lw::CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
