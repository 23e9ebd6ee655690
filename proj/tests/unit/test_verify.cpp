#include "gkosc/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "doctest.h"

using namespace gkosc::verify;

TEST_CASE("suite catalog lists every dispatchable token") {
  const auto names = suite_names();
  REQUIRE(names.size() == 8);
  for (const char* expected :
       {"orthonormality", "symmetry", "oracles", "section5", "hermite",
        "erratum", "parseval", "alpha2"}) {
    CHECK(std::find(names.begin(), names.end(), expected) != names.end());
  }
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suite("no_such_suite"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(""), std::invalid_argument);
}

TEST_CASE("dispatch returns the suite that was asked for") {
  const auto report = run_suite("erratum");
  CHECK(report.suite == "erratum");
  REQUIRE(report.cases.size() == 3);
  CHECK(report.pass);
  // The "must differ from the superseded polynomial" case is a lower bound.
  CHECK(report.cases[2].at_least);
  CHECK(report.cases[2].value >= report.cases[2].threshold);
}

TEST_CASE("fast suites pass and report coherent cases") {
  for (const char* name : {"section5", "hermite"}) {
    const auto report = run_suite(name);
    CHECK(report.suite == name);
    CHECK(report.pass);
    CHECK_FALSE(report.cases.empty());
    for (const auto& c : report.cases) {
      CHECK(c.pass == (c.at_least ? c.value >= c.threshold
                                  : c.value <= c.threshold));
    }
  }
}

TEST_CASE("pass flag is the conjunction of the cases") {
  const auto report = run_suite("alpha2");
  bool all = true;
  for (const auto& c : report.cases) all = all && c.pass;
  CHECK(report.pass == all);
}
