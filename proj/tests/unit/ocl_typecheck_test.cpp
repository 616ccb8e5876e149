// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "common/helpers.hpp"
#include "ocl/parser.hpp"
#include "ocl/typecheck.hpp"

using namespace ovc;
using test::demo_type_model;

namespace {

std::vector<ocl::TypeError> check(const std::string& source) {
  auto doc = ocl::parse(source);
  auto tm = demo_type_model();
  return ocl::typecheck(doc, tm);
}

}  // namespace

TEST_CASE("demo constraints type-check against the demo type model") {
  auto doc = ocl::parse(test::read_fixture("DemoConstraints.ocl"));
  auto tm = demo_type_model();
  auto errors = ocl::typecheck(doc, tm);
  for (const auto& e : errors) MESSAGE(e.invariant, ": ", e.message);
  CHECK(errors.empty());
}

TEST_CASE("navigation to an unknown attribute") {
  auto errors = check("context ManufacturingProcess inv p: self.procesType = 'A'");
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].kind == ocl::TypeError::Kind::UnknownAttribute);
  CHECK(errors[0].invariant == "p");
  CHECK(errors[0].loc.line == 1);
}

TEST_CASE("operand mismatches") {
  SUBCASE("1 + true") {
    auto errors = check("context ShopFloor inv p: 1 + true = 2");
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].kind == ocl::TypeError::Kind::OperandMismatch);
  }
  SUBCASE("string ordering is not defined") {
    auto errors = check("context ManufacturingProcess inv p: processType < 'B'");
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].kind == ocl::TypeError::Kind::OperandMismatch);
  }
  SUBCASE("logical operator on numbers") {
    auto errors = check("context ShopFloor inv p: 1 and 2");
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].kind == ocl::TypeError::Kind::OperandMismatch);
  }
  SUBCASE("integer widens to real in comparisons") {
    CHECK(check("context ShopFloor inv p: currentTemperature >= 21").empty());
  }
}

TEST_CASE("unknown context class") {
  auto errors = check("context Warehouse inv p: true");
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].kind == ocl::TypeError::Kind::UnknownContextClass);
}

TEST_CASE("allInstances on an unknown class") {
  auto errors = check("context ShopFloor inv p: Robot.allInstances()->size() = 0");
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].kind == ocl::TypeError::Kind::UnknownClass);
}

TEST_CASE("invariant body must be boolean") {
  auto errors = check("context ShopFloor inv p: 1 + 2");
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].kind == ocl::TypeError::Kind::NonBooleanInvariant);
}

TEST_CASE("iterator and collection operation shape checks") {
  SUBCASE("forAll needs a boolean body") {
    auto errors =
        check("context ShopFloor inv p: processes->forAll(x | x.processSequenceOrder)");
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].kind == ocl::TypeError::Kind::NonBooleanBody);
  }
  SUBCASE("iterating a scalar") {
    auto errors = check("context ShopFloor inv p: currentTemperature->forAll(x | true)");
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].kind == ocl::TypeError::Kind::NotACollection);
  }
  SUBCASE("navigation on a collection without an iterator") {
    auto errors = check("context ShopFloor inv p: processes.processType = 'A'");
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].kind == ocl::TypeError::Kind::NotAnObject);
  }
  SUBCASE("includes requires an argument") {
    auto errors = check("context ShopFloor inv p: processes->includes()");
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].kind == ocl::TypeError::Kind::ArityMismatch);
  }
  SUBCASE("size takes none") {
    auto errors = check("context ShopFloor inv p: processes->size(1) = 0");
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].kind == ocl::TypeError::Kind::ArityMismatch);
  }
  SUBCASE("sum over objects") {
    auto errors = check("context ShopFloor inv p: processes->sum() > 0");
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].kind == ocl::TypeError::Kind::OperandMismatch);
  }
  SUBCASE("nested collection from collect") {
    auto errors = check(
        "context ShopFloor inv p: "
        "ShopFloor.allInstances()->collect(s | s.processes)->size() = 1");
    REQUIRE(errors.size() == 1);
    CHECK(errors[0].kind == ocl::TypeError::Kind::NestedCollection);
  }
}

TEST_CASE("resolution rewrites survive a second pass") {
  auto doc = ocl::parse(
      "context ShopFloor inv p: "
      "processes->forAll(processSequenceOrder >= 1 and processSequenceOrder <= 4)");
  auto tm = demo_type_model();
  REQUIRE(ocl::typecheck(doc, tm).empty());
  // idempotent: resolved navigations still check clean
  CHECK(ocl::typecheck(doc, tm).empty());
}

TEST_CASE("iterator variable shadows a self attribute") {
  // 'processes' resolves through self, the variable name hides nothing else
  CHECK(check("context ShopFloor inv p: processes->forAll(currentTemperature | "
              "currentTemperature.processSequenceOrder >= 1)")
            .empty());
}

TEST_CASE("errors carry the invariant name") {
  auto errors = check(
      "context ShopFloor inv Good: currentTemperature <= maxTemperature\n"
      "context ShopFloor inv Bad: nope = 1\n");
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].invariant == "Bad");
  CHECK(errors[0].loc.line == 2);
}
