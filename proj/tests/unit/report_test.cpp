#include <doctest.h>

#include <cstdlib>

#include "lw/errors.hpp"
#include "lw/report.hpp"

using namespace lw;

TEST_SUITE("report") {
  TEST_CASE("exit codes") {
    Report r;
    CHECK(r.exit_code() == 0);
    r.checks.push_back({"a", "claim", CheckStatus::pass});
    CHECK(r.exit_code() == 0);
    r.checks.push_back({"b", "claim", CheckStatus::budget_exceeded});
    CHECK(r.exit_code() == 2);
    r.checks.push_back({"c", "claim", CheckStatus::falsified});
    CHECK(r.exit_code() == 1);
  }

  TEST_CASE("construction suite") {
    SuiteOptions opt;
    opt.params = {1, 3};
    opt.suite = "construction";
    auto r = run_suite(opt);
    CHECK(r.exit_code() == 0);
    CHECK(r.checks.size() == 9);
    auto j = r.to_json();
    CHECK(j["tool"] == "lwcheck");
    CHECK(j["params"]["k"] == 3);
    CHECK(j["checks"][0]["status"] == "pass");
    CHECK(j["checks"][0].contains("ms"));
    CHECK_FALSE(r.to_json(false)["checks"][0].contains("ms"));
  }

  TEST_CASE("reports are stable for a fixed seed") {
    SuiteOptions opt;
    opt.params = {1, 3};
    opt.suite = "all";
    opt.seed = 99;
    opt.samples = 6;
    auto a = run_suite(opt).to_json(false).dump();
    auto b = run_suite(opt).to_json(false).dump();
    CHECK(a == b);
    opt.seed = 100;
    CHECK(run_suite(opt).exit_code() == 0);
  }

  TEST_CASE("paths suite records family sizes") {
    SuiteOptions opt;
    opt.params = {1, 3};
    opt.suite = "paths";
    auto r = run_suite(opt);
    CHECK(r.exit_code() == 0);
    const auto& w = r.checks[0].witness;
    CHECK(w["pairs"].size() == 21);
    for (const auto& p : w["pairs"]) CHECK(p["size"].get<int>() <= 7);
  }

  TEST_CASE("unknown suite") {
    SuiteOptions opt;
    opt.suite = "everything";
    CHECK_THROWS_AS(run_suite(opt), PreconditionError);
  }

  TEST_CASE("budget from the environment") {
    ::setenv("LW_BUDGET", "1234", 1);
    CHECK(budget_from_env(5) == 1234);
    ::setenv("LW_BUDGET", "abc", 1);
    CHECK(budget_from_env(5) == 5);
    ::unsetenv("LW_BUDGET");
    CHECK(budget_from_env(5) == 5);
  }

  TEST_CASE("a tiny budget is reported, not failed") {
    SuiteOptions opt;
    opt.params = {1, 4};
    opt.suite = "paths";
    opt.budget = 5;
    CHECK(run_suite(opt).exit_code() == 2);
  }
}
