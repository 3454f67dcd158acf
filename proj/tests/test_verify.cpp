#include "doctest.h"
#include "fracx/errors.hpp"
#include "fracx/verify.hpp"

using namespace fracx;

TEST_CASE("suite names") {
  const auto& names = verify_suite_names();
  CHECK(names.size() == 6);
  CHECK_THROWS_AS(verify_suite("nope"), DomainError);
}

TEST_CASE("double gamma suite passes and is deterministic") {
  auto a = verify_suite("barnes");
  auto b = verify_suite("barnes");
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].pass);
    CHECK(a[i].statistic == b[i].statistic);
    CHECK(a[i].name == b[i].name);
  }
}

TEST_CASE("asymptotics suite passes") {
  for (const auto& r : verify_suite("asymptotics")) CHECK(r.pass);
}
