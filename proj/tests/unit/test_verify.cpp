#include <doctest.h>

#include <stdexcept>

#include "tamp1d/verify.hpp"

using namespace tamp1d;

TEST_CASE("verify suites pass and are deterministic") {
  for (const auto& suite : verify_suites()) {
    CAPTURE(suite);
    const auto report = run_verify(suite, 25, 7);
    CHECK(report.ok());
    CHECK_FALSE(report.results.empty());
    CHECK(report.format() == run_verify(suite, 25, 7).format());
  }
  const auto all = run_verify("all", 5, 1);
  std::size_t sum = 0;
  for (const auto& suite : {"intervals", "stepfn", "tamping", "norms"}) sum += run_verify(suite, 5, 1).results.size();
  CHECK(all.results.size() == sum);
  CHECK(all.format().find("PASS") != std::string::npos);
  CHECK_THROWS_AS(run_verify("nope", 1, 1), std::invalid_argument);
}
