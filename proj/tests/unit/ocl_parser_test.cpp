// Copyright (c) 2026 OVC contributors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "common/helpers.hpp"
#include "ocl/parser.hpp"
#include "util/error.hpp"

using namespace ovc;

TEST_CASE("parse the unique-order invariant") {
  auto doc = ocl::parse(
      "context ManufacturingProcess inv UniqueProcessOrderConstraint: "
      "ManufacturingProcess.allInstances()->isUnique(p | p.processSequenceOrder)");
  REQUIRE(doc.invariants.size() == 1);
  const auto& inv = doc.invariants[0];
  CHECK(inv.context_class == "ManufacturingProcess");
  CHECK(inv.name == "UniqueProcessOrderConstraint");

  const auto* call = std::get_if<ocl::IteratorCall>(&inv.body->node);
  REQUIRE(call != nullptr);
  CHECK(call->kind == ocl::IterKind::IsUnique);
  CHECK(call->var == "p");
  CHECK_FALSE(call->implicit_var);
  CHECK(std::holds_alternative<ocl::AllInstances>(call->receiver->node));
}

TEST_CASE("empty input parses to an empty document") {
  CHECK(ocl::parse("").invariants.empty());
  CHECK(ocl::parse("   -- just a comment\n").invariants.empty());
}

TEST_CASE("parse errors carry line, column and expectations") {
  try {
    ocl::parse("context X inv: 1 +");
    FAIL("expected ParseError");
  } catch (const ocl::ParseError& e) {
    CHECK(e.loc.line == 1);
    CHECK(e.loc.column == 19);
    REQUIRE(!e.expected.empty());
    CHECK(e.expected[0] == "expression");
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }

  SUBCASE("bad collection operation") {
    CHECK_THROWS_AS(ocl::parse("context X inv: c->frobnicate(1)"), ocl::ParseError);
  }
  SUBCASE("unterminated string") {
    CHECK_THROWS_AS(ocl::parse("context X inv: s = 'oops"), ocl::ParseError);
  }
  SUBCASE("stray character") {
    CHECK_THROWS_AS(ocl::parse("context X inv: 1 # 2"), ocl::ParseError);
  }
}

TEST_CASE("duplicate invariant names per context are rejected") {
  const char* text =
      "context A inv One: true\n"
      "context A inv One: false\n";
  try {
    ocl::parse(text);
    FAIL("expected DuplicateInvariant");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::duplicate_invariant);
  }
  // same name under a different context is fine
  CHECK(ocl::parse("context A inv One: true\ncontext B inv One: true\n").invariants.size() == 2);
}

TEST_CASE("unnamed invariants get positional names") {
  auto doc = ocl::parse("context A inv: true\ncontext A inv: false");
  REQUIRE(doc.invariants.size() == 2);
  CHECK(doc.invariants[0].name == "inv1");
  CHECK(doc.invariants[1].name == "inv2");
}

TEST_CASE("operator precedence") {
  // implies binds loosest, then the logical tier, then comparison, then
  // arithmetic: a = 1 and b = 2 implies c = 1 + 2 * 3
  auto doc = ocl::parse("context X inv p: a = 1 and b = 2 implies c = 1 + 2 * 3");
  const auto* implies = std::get_if<ocl::Binary>(&doc.invariants[0].body->node);
  REQUIRE(implies != nullptr);
  CHECK(implies->op == ocl::BinOp::Implies);

  const auto* conj = std::get_if<ocl::Binary>(&implies->lhs->node);
  REQUIRE(conj != nullptr);
  CHECK(conj->op == ocl::BinOp::And);

  const auto* eq = std::get_if<ocl::Binary>(&implies->rhs->node);
  REQUIRE(eq != nullptr);
  CHECK(eq->op == ocl::BinOp::Eq);
  const auto* add = std::get_if<ocl::Binary>(&eq->rhs->node);
  REQUIRE(add != nullptr);
  CHECK(add->op == ocl::BinOp::Add);
  const auto* mul = std::get_if<ocl::Binary>(&add->rhs->node);
  REQUIRE(mul != nullptr);
  CHECK(mul->op == ocl::BinOp::Mul);
}

TEST_CASE("string literals with quote escapes") {
  auto doc = ocl::parse("context X inv p: s = 'it''s'");
  const auto* eq = std::get_if<ocl::Binary>(&doc.invariants[0].body->node);
  REQUIRE(eq != nullptr);
  const auto* lit = std::get_if<ocl::Literal>(&eq->rhs->node);
  REQUIRE(lit != nullptr);
  CHECK(lit->value == model::Scalar(std::string("it's")));
}

TEST_CASE("pathologically nested expressions are rejected, not crashed") {
  std::string expr(5000, '(');
  expr += "1";
  expr += std::string(5000, ')');
  CHECK_THROWS_AS(ocl::parse("context X inv p: " + expr + " = 1"), ocl::ParseError);
}

TEST_CASE("print/parse round trip on the demo constraint file") {
  std::string source = test::read_fixture("DemoConstraints.ocl");
  auto first = ocl::parse(source);
  REQUIRE(first.invariants.size() == 3);

  std::string printed = ocl::print_document(first);
  auto second = ocl::parse(printed);
  CHECK(ocl::document_equal(first, second));

  // and printing is a fixed point after one round
  CHECK(ocl::print_document(second) == printed);
}

TEST_CASE("print/parse round trip on assorted expressions") {
  const char* snippets[] = {
      "1 + 2 * 3 - 4 / 5 = 0",
      "(processType = 'A' implies processSequenceOrder = 1) and true",
      "self.currentTemperature <= self.maxTemperature",
      "M.allInstances()->select(x | x.v > 0)->collect(x | x.v)->sum() >= 0",
      "c->forAll(p | p.v = 1 or p.v <> 2)",
      "c->exists(v > 3 xor v < 0)",  // implicit iterator variable
      "if a < b then -a else not c endif = d",
      "col->asSet()->size() = col->size() implies col->isUnique(e | e)",
      "col->includes(3) or col->isEmpty() or col->notEmpty()",
      "ShopFloor.allInstances()->size() = 1",
  };
  for (const char* snippet : snippets) {
    CAPTURE(snippet);
    auto first = ocl::parse(std::string("context X inv p: ") + snippet);
    auto second = ocl::parse(ocl::print_document(first));
    CHECK(ocl::document_equal(first, second));
  }
}
