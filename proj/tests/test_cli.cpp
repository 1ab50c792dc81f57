#include <doctest.h>

#include <sstream>

#include "freefrac/json_io.hpp"
#include "helpers.hpp"

using namespace freefrac;

namespace {

const Alphabet xyz = Alphabet::parse("x,y,z");

struct Run {
  int code;
  std::string out, err;
};

Run run(Session& s, const std::string& line) {
  std::ostringstream out, err;
  const int code = run_command(s, line, out, err).exit_code;
  return {code, out.str(), err.str()};
}

std::size_t parse_error_offset(const std::string& text) {
  try {
    parse_expr(text, xyz);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("parser reports offsets") {
  CHECK(parse_error_offset("x*(y") == 4);
  CHECK(parse_error_offset("x + w") == 4);
  CHECK(parse_error_offset("x)") == 1);
  CHECK(parse_error_offset("1/0") == 2);
  CHECK(parse_error_offset("x^y") == 2);
  CHECK(parse_error_offset("2.5") == 1);
}

TEST_CASE("printing round-trips through the parser") {
  for (const char* text : {"x - (x^-1 + (y^-1 - x)^-1)^-1", "-3/4*x*y^2", "(x + 1)^-2 - z",
                           "x*(y - z)*x", "-(x*y)^-1"}) {
    INFO(text);
    const Expr e = parse_expr(text, xyz);
    CHECK(same_expr(parse_expr(print_expr(e, xyz), xyz), e));
  }
  CHECK(print_expr(parse_expr("x-y", xyz), xyz) == "x - y");
  CHECK(print_expr(parse_expr("007", xyz), xyz) == "7");
  CHECK(print_expr(parse_expr("(y^-1 - x)^-1", xyz), xyz) == "(y^-1 - x)^-1");
}

TEST_CASE("unary minus applies to a base") {
  using K = ExprNode::Kind;
  const Expr e = parse_expr("-x^2", xyz);
  REQUIRE(e->kind == K::pow);
  CHECK(e->lhs->kind == K::neg);
  CHECK(parse_expr("-3/4", xyz)->value == Rational(-3, 4));
  const Expr n = parse_expr("-(x^2)", xyz);
  CHECK(n->kind == K::neg);
  CHECK(print_expr(n, xyz) == "-(x^2)");
  CHECK(same_expr(parse_expr(print_expr(n, xyz), xyz), n));
}

TEST_CASE("pipeline on small examples") {
  Session s(xyz);
  const Als sum = s.build("2/3*x*y + z + 1/3*x*y");
  const Als direct = als_from_poly(testing::poly(xyz, "x*y + z"), 3);
  CHECK(sum.dim() == direct.dim());
  CHECK(equal(sum, direct).result == Verdict::equal_certified);
  const Als f = s.build("x^-1*z*z^-1*y*z^-1");
  const Als g = s.build("x^-1*y*z^-1");
  CHECK(equal(f, g).result == Verdict::equal_certified);
  CHECK(f.dim() == g.dim());
  CHECK(export_als(Session(xyz).build("(x - (y^-1 - z)^-1)^-1"), xyz) ==
        export_als(Session(xyz).build("(x - (y^-1 - z)^-1)^-1"), xyz));
}

TEST_CASE("JSON export and import round-trip") {
  Session s(xyz);
  const Als f = s.build("(1 - x*y)^-1*z");
  const AlsDocument doc = import_als(export_als(f, xyz));
  CHECK(doc.alphabet == xyz);
  CHECK(doc.als == f);
}

TEST_CASE("JSON schema errors carry a pointer") {
  Session s(xyz);
  nlohmann::json j = als_to_json(s.build("x*y"), xyz);
  auto pointer_of = [](const nlohmann::json& doc) -> std::string {
    try {
      als_from_json(doc);
    } catch (const SchemaError& e) {
      return e.pointer();
    }
    return "";
  };
  nlohmann::json bad = j;
  bad["A"]["x"][1][2] = "1/0";
  CHECK(pointer_of(bad) == "/A/x/1/2");
  bad = j;
  bad["u"] = {0, 1, 0};
  CHECK(pointer_of(bad) == "/u");
  bad = j;
  bad.erase("n");
  CHECK(pointer_of(bad) == "/n");
  bad = j;
  bad["A"]["w"] = bad["A"]["x"];
  CHECK(pointer_of(bad) == "/A/w");
  CHECK(pointer_of(nlohmann::json::array()) == "(document)");
  CHECK_THROWS_AS(import_als("{"), UserError);
}

TEST_CASE("command outputs") {
  Session s(xyz);
  CHECK(run(s, "rank x*y*z").out == "4\n");
  CHECK(run(s, "equal x*y ; y*x").out == "unequal-certified\n");
  CHECK(run(s, "factor x - x*y*x").out.ends_with("atoms: 2 (certified)\n"));
  CHECK(run(s, "expand (1 - x)^-1 --deg 2").out == "1 + x + x*x\n");
  CHECK(run(s, "let p = x*y + 1").out == "p: rank 3\n");
  CHECK(run(s, "rank p^-1").out == "2\n");
  const Run j = run(s, "equal p ; 1 + x*y --json");
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["verdict"] == "equal-certified");
  CHECK(doc["witness"].contains("T"));
}

TEST_CASE("errors map to exit codes") {
  Session s(xyz);
  Run r = run(s, "rank x*(y");
  CHECK(r.code == 1);
  CHECK(r.err == "error: parse error at offset 4: expected ')'\n");
  r = run(s, "rank (x - x)^-1");
  CHECK(r.code == 1);
  CHECK(r.err == "error: division by zero: 'x - x' is zero\n");
  CHECK(run(s, "frobnicate").code == 1);
  CHECK(run(s, "factor x^-1").code == 1);
  CHECK(run(s, "expand x^-1 --deg 3").code == 1);
  CHECK(run(s, "let x = y").code == 1);
  CHECK(run(s, "import /nonexistent.json").code == 1);
}

TEST_CASE("trace lines precede the result") {
  Session s(xyz, {10, 1, true});
  const Run r = run(s, "rank x*y - x*y + z");
  CHECK(r.out.ends_with("\n2\n"));
  CHECK(r.out.find("→") != std::string::npos);
}
