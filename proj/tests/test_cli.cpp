#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qk/suites.hpp"

using namespace qk;

TEST_CASE("suite names") {
  CHECK(is_suite_name("kom1"));
  CHECK(is_suite_name("all"));
  CHECK(is_suite_name("killing-curvature"));
  CHECK(!is_suite_name("bogus"));
  CHECK(suite_names().size() == 12);
}

TEST_CASE("small suite runs green and its JSON is deterministic") {
  SuiteOptions opt;
  opt.n_max = 2;
  opt.r_max = 2;
  opt.timing = false;
  const SuiteResult r1 = run_suite("kom2", opt);
  CHECK(r1.pass());
  const std::string j1 = suite_result_json(r1, false);
  const SuiteResult r2 = run_suite("kom2", opt);
  CHECK(j1 == suite_result_json(r2, false));
  CHECK(j1.find("\"schema\": 1") != std::string::npos);
  CHECK(j1.find("\"status\": \"pass\"") != std::string::npos);
}

TEST_CASE("instances are sorted by key") {
  SuiteOptions opt;
  opt.n_max = 2;
  opt.r_max = 1;
  opt.timing = false;
  const SuiteResult r = run_suite("kom1", opt);
  for (size_t i = 1; i < r.instances.size(); ++i)
    CHECK(r.instances[i - 1].sort_key() <= r.instances[i].sort_key());
}

TEST_CASE("dims") {
  const DimsResult d2 = compute_dims(2);
  REQUIRE(d2.ranks.size() == 3);
  CHECK(d2.ranks[0].rank == 5);
  CHECK(d2.ranks[1].rank == 8);
  CHECK(d2.ranks[2].rank == 3);
  CHECK(d2.total == 16);
  CHECK(d2.prim_dims_ok);

  const DimsResult d3 = compute_dims(3);
  CHECK(d3.total == 64);

  const DimsResult d1 = compute_dims(1);
  CHECK(d1.total == 4);
  CHECK(d1.expected_total == 4);
}

TEST_CASE("wolf table rows") {
  const auto rows = wolf_rows(2);
  REQUIRE(rows.size() == 8);
  CHECK(rows[0].regularity == "DEGENERATE");
  for (size_t t = 1; t < rows.size(); ++t) CHECK(rows[t].regularity == "REGULAR");
  CHECK(rows[3].l_values.find("1/6") != std::string::npos);  // G2/SO(4)
  const std::string j = wolf_rows_json(rows);
  CHECK(j.find("DEGENERATE") != std::string::npos);
}
