#include <doctest.h>

#include "helpers.hpp"

using namespace freefrac;
using testing::mat;

TEST_CASE("rationals parse in base ten and reduce") {
  CHECK(parse_rational("010") == 10);
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(-1, 3)) == "-1/3");
  CHECK_THROWS_AS(parse_rational("1/0"), UserError);
  CHECK_THROWS_AS(parse_rational("abc"), UserError);
}

TEST_CASE("solve_linear returns particular solution and nullspace") {
  const RatMatrix m = mat({{1, 2, 3}, {2, 4, 7}});
  const LinSolveResult r = solve_linear(m, {1, 3});
  REQUIRE(r.feasible);
  CHECK(m * r.particular == RatVector{1, 3});
  REQUIRE(r.nullspace.size() == 1);
  CHECK(is_zero(m * r.nullspace[0]));
  CHECK_FALSE(solve_linear(mat({{1, 1}, {2, 2}}), {1, 3}).feasible);
}

TEST_CASE("rank and inverse agree with hand values") {
  CHECK(rank(mat({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(RatMatrix(3, 2)) == 0);
  const RatMatrix a = mat({{2, 1}, {1, 1}});
  const auto inv = invert(a);
  REQUIRE(inv);
  CHECK(*inv == mat({{1, -1}, {-1, 2}}));
  CHECK_FALSE(invert(mat({{1, 2}, {2, 4}})));
}

TEST_CASE("nullspace vectors are independent and annihilated") {
  Rng rng = make_rng(11, 0);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    RatMatrix m(3, 5);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = d(rng);
    const auto ns = nullspace(m);
    CHECK(ns.size() + rank(m) == 5);
    for (const auto& x : ns) CHECK(is_zero(m * x));
  }
}

TEST_CASE("quadratic rational roots") {
  CHECK(quadratic_rational_roots(-2, 1, 1) == std::vector<Rational>{1, -2});
  CHECK(quadratic_rational_roots(1, 2, 1) == std::vector<Rational>{-1});
  CHECK(quadratic_rational_roots(-2, 0, 1).empty());
  CHECK(quadratic_rational_roots(3, -6, 0) == std::vector<Rational>{Rational(1, 2)});
}

TEST_CASE("complete_basis keeps the given vectors in place") {
  const RatMatrix b = complete_basis({{1, 1, 0}}, {{0, 0, 1}}, 3);
  CHECK(b.col(0) == RatVector{1, 1, 0});
  CHECK(b.col(2) == RatVector{0, 0, 1});
  CHECK(invert(b));
}

TEST_CASE("determinant and rational roots") {
  CHECK(determinant(mat({{2, 1}, {1, 1}})) == 1);
  CHECK(determinant(mat({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
  // (t - 1/2)(t + 3) t = t^3 + 5/2 t^2 - 3/2 t
  const auto roots = rational_roots({0, Rational(-3, 2), Rational(5, 2), 1});
  REQUIRE(roots);
  CHECK(*roots == std::vector<Rational>{-3, 0, Rational(1, 2)});
  CHECK(rational_roots({2, 0, -1})->empty());
}

TEST_CASE("affine family solver finds isolated parameters") {
  // t y = 1 and y = 2 hold together only at t = 1/2.
  const RatMatrix m0 = mat({{0}, {1}}), m1 = mat({{1}, {0}});
  const AffineFamilySearch s = solve_affine_family(m0, m1, {1, 2}, {0, 0});
  REQUIRE(s.solution);
  CHECK(s.solution->t == Rational(1, 2));
  CHECK(s.solution->y == RatVector{2});
  CHECK(s.complete);
  // t y = 1 and y = 0 has no solution for any t.
  const AffineFamilySearch none = solve_affine_family(m0, m1, {1, 0}, {0, 0});
  CHECK_FALSE(none.solution);
  CHECK(none.complete);
}
