#include <doctest.h>

#include "qbg/error.hpp"
#include "qbg/verify.hpp"

using namespace qbg;

TEST_CASE("every suite passes at n = 3") {
  for (const auto& name : suite_names()) {
    SuiteOptions options;
    options.n = 3;
    const auto report = run_suite(name, options);
    INFO(name << ": " << report.summary);
    for (const auto& f : report.failures) INFO(f);
    CHECK(report.passed);
  }
}

TEST_CASE("reported counts") {
  SuiteOptions options;
  options.n = 4;
  CHECK(run_suite("distance", options).summary == "576 pairs, 0 mismatches");
  options.n = 3;
  CHECK(run_suite("tilted", options).summary == "216 triples, equivalences hold");
}

TEST_CASE("bad requests") {
  SuiteOptions options;
  options.n = 9;
  CHECK_THROWS_AS(run_suite("samepath", options), PreconditionError);
  CHECK_THROWS_AS(run_suite("nope", SuiteOptions{}), PreconditionError);
}
