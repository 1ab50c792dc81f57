#include <doctest.h>

#include "helpers.hpp"

using namespace freefrac;

namespace {
const Alphabet xyz = Alphabet::parse("x,y,z");
}

TEST_CASE("Hua's identity is certified") {
  Session s(xyz);
  const Als lhs = s.build("x - (x^-1 + (y^-1 - x)^-1)^-1");
  const Als rhs = s.build("x*y*x");
  const EqualityVerdict v = equal(lhs, rhs);
  CHECK(v.result == Verdict::equal_certified);
  REQUIRE(v.transformation);
}

TEST_CASE("the witness satisfies the linear conditions") {
  Session s(xyz);
  const Als f = s.build("(1 - x*y)^-1*x");
  const Als g = s.build("x*(1 - y*x)^-1");
  const auto w = word_problem_witness(f, g);
  REQUIRE(w);
  const auto& [t, u] = *w;
  for (std::size_t l = 0; l < f.matrix().terms(); ++l) {
    RatMatrix lhs = t * g.matrix()[l] - f.matrix()[l] * u;
    for (std::size_t i = 0; i < lhs.rows(); ++i) lhs(i, 0) -= f.matrix()[l](i, 0);
    CHECK(lhs.is_zero());
  }
  CHECK(t * g.rhs() == f.rhs());
  CHECK(is_zero(u.row(0)));
}

TEST_CASE("distinct elements are certified unequal") {
  Session s(xyz);
  CHECK(equal(s.build("x*y"), s.build("y*x")).result == Verdict::unequal_certified);
  CHECK(equal(s.build("x^-1"), s.build("x*y")).result == Verdict::unequal_certified);
  CHECK(equal(s.build("(x + y)^-1"), s.build("x^-1 + y^-1")).result == Verdict::unequal_certified);
}

TEST_CASE("probabilistic oracle witnesses inequality at a point") {
  const Als f = als_monomial({0, 1}, 3), g = als_monomial({1, 0}, 3);
  const EqualityVerdict v = equal_probabilistic(f, g, {5, 2, 3});
  CHECK(v.result == Verdict::unequal_witnessed);
  REQUIRE(v.point);
  CHECK(als_eval(f, *v.point) != als_eval(g, *v.point));
  CHECK(equal_probabilistic(f, f).result == Verdict::equal_probabilistic);
}

TEST_CASE("verdicts and oracle never contradict on small rational expressions") {
  Session s(xyz);
  const char* exprs[] = {"x^-1*y", "y*x^-1", "(x*y)^-1", "y^-1*x^-1", "x*(y*x)^-1",
                         "(x*y)^-1*x", "x - x", "(1 + x)^-1", "1 - x*(1 + x)^-1"};
  for (const char* a : exprs)
    for (const char* b : exprs) {
      CAPTURE(a);
      CAPTURE(b);
      const Als f = s.build(a), g = s.build(b);
      CHECK(equal(f, g).equal() == testing::same_element(f, g));
    }
}

TEST_CASE("rank and zero test") {
  Session s(xyz);
  CHECK(rank(s.build("x*y*z")) == 4);
  CHECK(rank(s.build("(x*y*z)^-1")) == 3);
  CHECK(is_zero(s.build("x*y - x*y")));
  CHECK(is_zero(als_add(als_monomial({0}, 3), als_scale(als_monomial({0}, 3), -1))));
  CHECK_FALSE(is_zero(s.build("x^-1")));
}
