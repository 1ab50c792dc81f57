#include <doctest.h>

#include "helpers.hpp"

using namespace freefrac;
using testing::poly;

namespace {
const Alphabet xyz = Alphabet::parse("x,y,z");
}

TEST_CASE("alphabet validation") {
  CHECK(xyz.index_of("y") == 1u);
  CHECK_FALSE(xyz.index_of("w"));
  CHECK_THROWS_AS(Alphabet::parse("x,x"), UserError);
  CHECK_THROWS_AS(Alphabet::parse("x,1"), UserError);
  CHECK_THROWS_AS(Alphabet::parse(""), UserError);
}

TEST_CASE("words are ordered shortlex") {
  ShortLex less;
  CHECK(less({2}, {0, 0}));
  CHECK(less({0, 1}, {1, 0}));
  CHECK_FALSE(less({1}, {1}));
}

TEST_CASE("multiplication does not commute") {
  const NcPoly x = NcPoly::monomial({0}), y = NcPoly::monomial({1});
  CHECK(x * y != y * x);
  CHECK((x * y - y * x).terms().size() == 2);
  CHECK((x + y) * (x + y) == poly(xyz, "x*x + x*y + y*x + y*y"));
}

TEST_CASE("printing") {
  CHECK(poly(xyz, "2*x*y - z + 1").str(xyz) == "1 - z + 2*x*y");
  CHECK(poly(xyz, "x - x").str(xyz) == "0");
  CHECK(poly(xyz, "-1/2*y").str(xyz) == "-1/2*y");
}

TEST_CASE("hankel rank of small polynomials") {
  CHECK(hankel_rank(NcPoly()) == 0);
  CHECK(hankel_rank(NcPoly::constant(3)) == 1);
  CHECK(hankel_rank(poly(xyz, "x*y*z")) == 4);
  CHECK(hankel_rank(poly(xyz, "x*y + z")) == 3);
  CHECK(hankel_rank(poly(xyz, "x - x*y*x")) == 4);
}

TEST_CASE("evaluation is a ring homomorphism at matrix points") {
  Rng rng = make_rng(5, 0);
  const NcPoly p = poly(xyz, "x*y - 2*z + 1"), q = poly(xyz, "y*x*x + z");
  for (std::size_t m = 1; m <= 3; ++m) {
    const MatrixPoint pt = random_point(3, m, rng);
    CHECK(poly_eval(p * q, pt) == poly_eval(p, pt) * poly_eval(q, pt));
    CHECK(poly_eval(p + q, pt) == poly_eval(p, pt) + poly_eval(q, pt));
  }
}

TEST_CASE("seeded rng streams are reproducible") {
  Rng a = make_rng(9, 3), b = make_rng(9, 3), c = make_rng(9, 4);
  CHECK(a() == b());
  CHECK(make_rng(9, 3)() != c());
}
