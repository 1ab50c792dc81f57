#include <doctest.h>

#include "helpers.hpp"

using namespace freefrac;
using testing::make_als;
using testing::mat;
using testing::poly;

namespace {

const Alphabet xyz = Alphabet::parse("x,y,z");

Als difference_system() {
  return make_als(xyz,
                  {{"1", "-x", ".", "-1", ".", "."},
                   {".", "1", "-y", ".", ".", "."},
                   {".", ".", "1", ".", ".", "."},
                   {".", ".", ".", "1", "-x", "-z"},
                   {".", ".", ".", ".", "1", "-y"},
                   {".", ".", ".", ".", ".", "1"}},
                  {"0", "0", "-1", "0", "0", "1"});
}

Als decrement_case() {
  return make_als(xyz,
                  {{"1", "-1", ".", "."},
                   {".", "1", "x", "."},
                   {".", "-y", "1", "-1"},
                   {".", ".", ".", "1"}},
                  {".", ".", ".", "1"});
}

Als refinement_input() {
  return make_als(xyz,
                  {{"1", "-z", ".", "."},
                   {".", "2 + x", ".", "1"},
                   {".", "2*y", "-3", "y"},
                   {".", "x", "3*x", "."}},
                  {".", ".", ".", "1"});
}

}  // namespace

TEST_CASE("pivot structure of upper block triangular systems") {
  CHECK(pivot_structure(difference_system()).sizes == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
  CHECK(pivot_structure(refinement_input()).sizes == std::vector<std::size_t>{1, 3});
  CHECK(pivot_structure(decrement_case()).sizes == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("polynomial minimization of -xy + (xy + z)") {
  Trace trace;
  const Als f = minimize_polynomial(difference_system(), &trace);
  CHECK(f.dim() == 2);
  REQUIRE_FALSE(trace.lines.empty());
  CHECK(trace.lines.front() == "L k=3 dim 6→5 T=[0,0,1] U=[0,0,-1]");
  CHECK(als_expand(f, 4).terms == poly(xyz, "z"));
}

TEST_CASE("block minimization of (xy - z)(xy - z)^-1") {
  const Als f = make_als(xyz,
                         {{"1", "-x", "z", ".", "."},
                          {".", "1", "-y", ".", "."},
                          {".", ".", "1", "-1", "."},
                          {".", ".", ".", "y", "-1"},
                          {".", ".", ".", "-z", "x"}},
                         {".", ".", ".", ".", "1"});
  const Minimized m = minimize(f);
  CHECK(m.certified);
  CHECK(m.als == Als::scalar(1, 3));
}

TEST_CASE("general minimization needs the decrement after a first-block step") {
  const Als with = minimize_general(decrement_case());
  CHECK(with.dim() == 2);
  CHECK(with.matrix() == make_als(xyz, {{"1", "x"}, {"-y", "1"}}, {".", "1"}).matrix());
  const Als without = minimize_general(decrement_case(), nullptr, {false});
  CHECK(without.dim() == 3);
  CHECK(pivot_structure(without).count() == 2);
  CHECK(testing::same_element(with, decrement_case()));
  CHECK(testing::same_element(without, decrement_case()));
}

TEST_CASE("refining transformation for a 4-dimensional system") {
  const Transformation t{mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, -1, 0, 1}}),
                         mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, Rational(1, 3)}, {0, -2, 1, 0}}),
                         TransformShape::admissible};
  const Als refined = apply_transformation(refinement_input(), t);
  const Als expected = make_als(xyz,
                                {{"1", "-z", ".", "."},
                                 {".", "x", "1", "."},
                                 {".", ".", "y", "-1"},
                                 {".", ".", "-1", "x"}},
                                {".", ".", ".", "1"});
  CHECK(refined == expected);
  CHECK(pivot_structure(refined).sizes == std::vector<std::size_t>{1, 1, 2});

  const RefineResult r = refine_pivots(refinement_input());
  CHECK(r.status == RefineStatus::certified);
  CHECK(pivot_structure(r.als).sizes == std::vector<std::size_t>{1, 1, 2});
  CHECK(testing::same_element(r.als, refinement_input()));
}

TEST_CASE("non-overlapping linear ansatz for (x - xyx)^-1") {
  const Als f = make_als(xyz, {{"x", "1", "."}, {"1", "y - 1", "-1"}, {".", "x", "x"}},
                         {".", ".", "1"});
  const auto split = split_block_linear(f, 0, 3);
  REQUIRE(split);
  CHECK(split->rows == std::vector<std::size_t>{1, 2});
  CHECK(split->cols == std::vector<std::size_t>{0});
  CHECK(split->ansatz.p(1, 0) == 0);
  CHECK(split->ansatz.p(2, 0) == -1);
  CHECK(split->ansatz.q(2, 0) == 1);
  const Als g = apply_transformation(f, split->applied);
  CHECK(pivot_structure(g).count() == 2);
  CHECK(testing::same_element(f, g));
}

TEST_CASE("minimal polynomial rank equals Hankel rank") {
  Rng rng = make_rng(17, 0);
  std::uniform_int_distribution<int> coeff(-2, 2), len(0, 3), letter(0, 2);
  for (int trial = 0; trial < 40; ++trial) {
    NcPoly p;
    for (int t = 0; t < 3; ++t) {
      Word w(static_cast<std::size_t>(len(rng)));
      for (auto& l : w) l = static_cast<Letter>(letter(rng));
      p.add_term(w, coeff(rng));
    }
    const Als f = als_from_poly(p, 3);
    CHECK(f.dim() == hankel_rank(p));
    if (!p.is_zero()) CHECK(als_expand(f, 4).terms == p);
  }
}

TEST_CASE("minimize certifies and preserves rational elements") {
  Session s(xyz);
  for (const char* e : {"x*(y*x)^-1", "(x + y)^-1 - x^-1", "(1 - x*y)^-1*x", "x^-1*y^-1"}) {
    INFO(e);
    const Als raw = als_mul(s.build("x"), s.build(e));
    const Minimized m = minimize(raw);
    CHECK(m.certified);
    CHECK(is_minimal_exact(m.als) == true);
    CHECK(testing::same_element(raw, m.als));
    CHECK(minimize(m.als).als.dim() == m.als.dim());
  }
}

TEST_CASE("series reduction agrees with the certificate") {
  const Als f = decrement_case();
  CHECK(is_minimal_exact(f) == false);
  const auto r = reduce_by_series(f);
  REQUIRE(r);
  CHECK(r->dim() == 2);
  CHECK(is_minimal_exact(*r) == true);
  CHECK(testing::same_element(f, *r));
}
