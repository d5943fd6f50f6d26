#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "so3radon/verify.hpp"

using namespace so3radon;

TEST_CASE("all suites pass on the default seed") {
  const VerifyReport r = run_verify({});
  for (const CheckResult& c : r.checks) {
    INFO(c.suite << " / " << c.name << ": " << c.measured);
    CHECK(c.passed);
  }
  CHECK(r.passed());
  CHECK(r.checks.size() > 20);
}

TEST_CASE("tampered 4 pi fails the isometry suite") {
  SuiteOptions o;
  o.four_pi_scale = 1.01;
  const VerifyReport r = run_verify({"isometry"}, o);
  CHECK_FALSE(r.passed());
  for (const CheckResult& c : r.checks)
    if (c.name.rfind("Sobolev isometry", 0) == 0) CHECK_FALSE(c.passed);
  CHECK(run_verify({"isometry"}).passed());
}

TEST_CASE("suite selection") {
  const VerifyReport r = run_verify({"sphere3"});
  CHECK_FALSE(r.checks.empty());
  for (const CheckResult& c : r.checks) CHECK(c.suite == "sphere3");
  CHECK_THROWS_AS(run_verify({"nonsense"}), DomainError);
}

TEST_CASE("report formats") {
  const VerifyReport r = run_verify({"rotations"});
  const Json j = r.to_json();
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == r.checks.size());
  CHECK(j["checks"][0].contains("measured"));
  CHECK(r.summary().find("checks passed") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  CHECK(run_verify({"radon", "sampling"}).to_json().dump() == run_verify({"radon", "sampling"}).to_json().dump());
}
