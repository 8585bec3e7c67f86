#include <cmath>

#include "doctest.h"
#include "error.hpp"
#include "runner.hpp"

using namespace roe;

TEST_CASE("thm-main1 with 100 trials at dim 4") {
  RunConfig c;
  c.suite = "thm-main1";
  c.trials = 100;
  c.dim = 4;
  c.seed = 7;
  const SuiteReport r = run_suite(c);
  CHECK(r.passed == 100);
  CHECK(r.all_passed());
  CHECK(r.boundary_trials == 10);
  REQUIRE(r.links.size() == 4);
  CHECK(r.links[0].lhs == "I");
  CHECK(r.links[3].rhs == "V");
  for (const LinkSummary& l : r.links) CHECK(l.failures == 0);
}

TEST_CASE("zero trials yields an explicit note") {
  RunConfig c;
  c.suite = "thm-main1";
  c.trials = 0;
  const SuiteReport r = run_suite(c);
  CHECK(r.all_passed());
  const nlohmann::json j = suite_report_to_json(r);
  CHECK(j["summary"]["note"] == "0 trials");
  CHECK(j["trials"].empty());
  CHECK(suite_report_table(r).find("0 trials") != std::string::npos);
}

TEST_CASE("reports are independent of the thread count") {
  RunConfig c;
  c.suite = "cor-delta-ge";
  c.trials = 40;
  c.seed = 3;
  c.field = Field::Complex;
  c.threads = 1;
  const std::string one = suite_report_to_json(run_suite(c)).dump();
  c.threads = 4;
  const std::string four = suite_report_to_json(run_suite(c)).dump();
  CHECK(one == four);
  const nlohmann::json j = nlohmann::json::parse(one);
  CHECK(j.contains("tool_version"));
  CHECK(j.contains("config"));
  CHECK(j.contains("summary"));
  CHECK_FALSE(j["config"].contains("threads"));
}

TEST_CASE("trial parameters honour pins and suite constraints") {
  RunConfig c;
  c.suite = "cor-entropy-le";
  const SuiteDef& s = find_suite(c.suite);
  for (std::uint64_t t = 0; t < 50; ++t) {
    const ChainParams p = trial_params(s, c, t);
    CHECK(p.alpha == 0.0);
    CHECK(p.beta == 1.0);
    CHECK(p.delta == 1.0);
  }
  c.suite = "thm-primed-ge";
  for (std::uint64_t t = 0; t < 50; ++t) CHECK(trial_params(find_suite(c.suite), c, t).delta <= 1.0);
  c.suite = "thm-main1";
  c.alpha = 2.0;
  for (std::uint64_t t = 0; t < 50; ++t) CHECK(trial_params(find_suite(c.suite), c, t).alpha == 2.0);

  RunConfig bad;
  bad.suite = "cor-entropy-le";
  bad.alpha = 1.0;
  CHECK_THROWS_AS(run_suite(bad), InvalidArgument);
  bad.suite = "thm-main1";
  bad.alpha.reset();
  bad.delta = 2.0;
  CHECK_THROWS_AS(run_suite(bad), InvalidArgument);
  bad.suite = "unknown";
  CHECK_THROWS_AS(run_suite(bad), InvalidArgument);
  bad.suite = "thm-main1";
  bad.delta.reset();
  bad.tol = 0.0;
  CHECK_THROWS_AS(run_suite(bad), InvalidArgument);
}

TEST_CASE("every suite passes a short run in both fields") {
  for (const SuiteDef& s : all_suites()) {
    for (Field field : {Field::Real, Field::Complex}) {
      RunConfig c;
      c.suite = std::string(s.name);
      c.trials = 30;
      c.field = field;
      c.seed = 1;
      const SuiteReport r = run_suite(c);
      CHECK_MESSAGE(r.all_passed(), s.name, " ", field_name(field));
    }
  }
}

TEST_CASE("check_instance wraps a single pair") {
  const SymMatrix id = SymMatrix::identity(2);
  const SuiteReport ok = check_instance("thm-main1", id, 2.0 * id, {}, 1e-8);
  CHECK(ok.all_passed());
  const SuiteReport bad = check_instance("thm-main1", id, 0.5 * id, {}, 1e-8);
  CHECK(bad.precondition_failed == 1);
  const nlohmann::json j = suite_report_to_json(bad);
  CHECK(j["trials"][0]["verdict"] == "precondition_failed");
  CHECK(j["trials"][0].contains("matrices"));
}

TEST_CASE("diagonal oracle") {
  OracleConfig c;
  c.trials = 50;
  OracleReport r = oracle_compare(c);
  CHECK(r.passed());
  CHECK(r.max_deviation <= 1e-10);
  CHECK(r.entries.size() >= 30);

  c.dim = 1;
  r = oracle_compare(c);
  CHECK(r.max_deviation <= 1e-14);

  c.dim = 8;
  c.field = Field::Complex;
  r = oracle_compare(c);
  CHECK(r.max_deviation <= 1e-10);
  const nlohmann::json j = oracle_report_to_json(r);
  CHECK(j["summary"]["verdict"] == "pass");
}
