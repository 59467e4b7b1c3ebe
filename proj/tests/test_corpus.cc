#include <doctest.h>

#include "belyi/corpus.hpp"
#include "belyi/error.hpp"

using namespace belyi;

TEST_CASE("quick criteria pass") {
  for (int id : {1, 2, 3, 4, 6, 11}) {
    CriterionResult r = run_criterion(id);
    CAPTURE(r.detail);
    CHECK(r.id == id);
    CHECK(r.pass);
    CHECK(r.expected == r.computed);
  }
}

TEST_CASE("perturbed expectation fails") {
  CriterionResult r = run_criterion(4, {.perturb = 4});
  CHECK_FALSE(r.pass);
  CHECK(r.expected != r.computed);
  CHECK(format_result(r).rfind("FAIL", 0) == 0);
  CriterionResult other = run_criterion(4, {.perturb = 3});
  CHECK(other.pass);
  CHECK(format_result(other).rfind("PASS", 0) == 0);
}

TEST_CASE("unknown criterion") {
  CHECK_THROWS_AS(run_criterion(0), PreconditionError);
  CHECK_THROWS_AS(run_criterion(kCriterionCount + 1), PreconditionError);
}
