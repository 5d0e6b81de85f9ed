#include "doctest.h"

#include <uhg/script.hpp>

#include <string>

using namespace uhg;
using namespace uhg::script;

TEST_CASE("parsing a small program") {
  ParseResult pr = parse("#field rational  a=[0:0:1]; A=dual(a); assert incident([1:0:0], A);");
  REQUIRE(pr.ok());
  CHECK(pr.program->field == "rational");
  REQUIRE(pr.program->stmts.size() == 3);
  CHECK(pr.program->stmts[0].kind == Stmt::Kind::Binding);
  CHECK(pr.program->stmts[0].name == "a");
  CHECK(pr.program->stmts[2].kind == Stmt::Kind::Assert);
  CHECK(pr.program->stmts[2].name == "incident");
}

TEST_CASE("directive variants") {
  CHECK(parse("a = [0:0:1];\n").program->field == "rational");
  CHECK(parse("#field fp 11\na = [0:0:1];\n").program->field == "fp:11");
  CHECK(parse("# comment first\n#field fp 7\na = [1:0:1];\n").program->field == "fp:7");

  ParseResult bad = parse("#field fp 2\na = [0:0:1];\n");
  CHECK_FALSE(bad.ok());
  REQUIRE(bad.diagnostics.size() == 1);
  CHECK(bad.diagnostics[0].line == 1);
  CHECK(bad.diagnostics[0].message == "characteristic 2 is not supported");

  ParseResult late = parse("a = [0:0:1];\n#field fp 7\n");
  CHECK_FALSE(late.ok());

  ParseResult notprime = parse("#field fp 9\n");
  CHECK_FALSE(notprime.ok());
}

TEST_CASE("diagnostics carry positions") {
  ParseResult pr = parse("b = meet(;\n");
  CHECK_FALSE(pr.ok());
  REQUIRE_FALSE(pr.diagnostics.empty());
  CHECK(pr.diagnostics[0].line == 1);
  CHECK(pr.diagnostics[0].column == 10);
  CHECK(pr.diagnostics[0].str() == "1:10: error: expected an expression");

  CHECK_FALSE(parse("a = [0:0:1]; a = [1:0:1];").ok());          // rebinding
  CHECK_FALSE(parse("a = dual(b);").ok());                       // unknown name
  CHECK_FALSE(parse("a = frobnicate([0:0:1]);").ok());           // unknown function
  CHECK_FALSE(parse("a = join([0:0:1]);").ok());                 // arity
  CHECK_FALSE(parse("assert nearly([0:0:1], [0:0:1]);").ok());   // unknown predicate
  CHECK_FALSE(parse("a = [0:0:1]").ok());                        // missing semicolon
}

TEST_CASE("pretty printing round-trips") {
  std::string src =
      "# layout gets normalized\n"
      "a=[0:0:1];b=[3/5:0:1];\n"
      "m = midpoints( a , b );\n"
      "assert eq(quadrance(a, m.1), -1/8);\n"
      "n = null_points_on(join(a, b));\n";
  ParseResult p1 = parse(src);
  REQUIRE(p1.ok());
  std::string canon = pretty(*p1.program);
  ParseResult p2 = parse(canon);
  REQUIRE(p2.ok());
  CHECK(*p1.program == *p2.program);
  CHECK(pretty(*p2.program) == canon);
  CHECK(canon.substr(0, 15) == "#field rational");
}

TEST_CASE("evaluation binds and checks") {
  ParseResult pr = parse(
      "a = [0:0:1];\n"
      "b = [1:0:2];\n"
      "q = quadrance(a, b);\n"
      "assert eq(spread((1:0:0), (0:1:0)), 1);\n"
      "assert on_null([1:1:1]);\n");
  REQUIRE(pr.ok());
  Evaluation ev = evaluate(*pr.program);

  CHECK(ev.completed);
  CHECK_FALSE(ev.all_passed);
  REQUIRE(ev.results.size() == 5);
  CHECK(ev.results[2].str() == "q = -1/3");
  CHECK(ev.results[3].kind == StmtResult::Kind::AssertPassed);
  CHECK(ev.results[3].str() == "assert eq : pass (lhs = 1, rhs = 1)");
  CHECK(ev.results[4].kind == StmtResult::Kind::AssertFailed);
  CHECK(ev.results[4].str() == "assert on_null : FAIL (form = 1)");
  CHECK(ev.bindings.at("q").str() == "-1/3");
}

TEST_CASE("tuple bindings index midpoint pairs") {
  ParseResult pr = parse(
      "a = [0:0:1];\n"
      "b = [3/5:0:1];\n"
      "m = midpoints(a, b);\n"
      "assert perp(m.1, m.2);\n"
      "assert eq(m.1, [1:0:3]);\n");
  REQUIRE(pr.ok());
  Evaluation ev = evaluate(*pr.program);
  CHECK(ev.all_passed);
  CHECK(ev.bindings.at("m").tuple);
  CHECK(ev.bindings.at("m").str() == "{[1:0:3], [3:0:1]}");
}

TEST_CASE("binding failures stop evaluation") {
  ParseResult pr = parse(
      "a = [0:0:1];\n"
      "b = [1/2:0:1];\n"
      "m = midpoints(a, b);\n"
      "c = join(a, b);\n");
  REQUIRE(pr.ok());
  Evaluation ev = evaluate(*pr.program);

  CHECK_FALSE(ev.completed);
  CHECK_FALSE(ev.all_passed);
  REQUIRE(ev.results.size() == 3);
  CHECK(ev.results[2].kind == StmtResult::Kind::BindingFailed);
  CHECK(ev.bindings.count("b") == 1);
  CHECK(ev.bindings.count("m") == 0);
  CHECK(ev.bindings.count("c") == 0);
}

TEST_CASE("failed assertions do not stop evaluation") {
  ParseResult pr = parse(
      "a = [2:0:1];\n"
      "assert on_null(a);\n"
      "b = dual(a);\n"
      "assert incident(a, b);\n");
  REQUIRE(pr.ok());
  Evaluation ev = evaluate(*pr.program);
  CHECK(ev.completed);
  REQUIRE(ev.results.size() == 4);
  CHECK(ev.results[1].kind == StmtResult::Kind::AssertFailed);
  CHECK(ev.results[2].kind == StmtResult::Kind::Bound);
  CHECK(ev.results[3].kind == StmtResult::Kind::AssertFailed);
}

TEST_CASE("finite field evaluation") {
  ParseResult pr = parse(
      "#field fp 7\n"
      "a = [1:0:1];\n"
      "b = [2:1:1];\n"
      "assert on_null(a);\n"
      "q = quadrance([0:0:1], b);\n"
      "n = null_points_on((1:1:1));\n");
  REQUIRE(pr.ok());
  Evaluation ev = evaluate(*pr.program);
  CHECK(ev.completed);
  CHECK(ev.all_passed);
  CHECK(ev.bindings.at("n").items.size() == 2);
}

TEST_CASE("kind mismatches surface as failures not crashes") {
  ParseResult pr = parse(
      "a = [0:0:1];\n"
      "L = (1:0:0);\n"
      "assert eq(a, L);\n");
  REQUIRE(pr.ok());
  Evaluation ev = evaluate(*pr.program);
  CHECK(ev.completed);
  REQUIRE(ev.results.size() == 3);
  CHECK(ev.results[2].kind == StmtResult::Kind::AssertFailed);

  ParseResult pr2 = parse("q = quadrance((1:0:0), (0:1:0));\n");
  REQUIRE(pr2.ok());
  Evaluation ev2 = evaluate(*pr2.program);
  CHECK_FALSE(ev2.completed);
  CHECK(ev2.results[0].kind == StmtResult::Kind::BindingFailed);
}
