#include <doctest.h>

#include "helpers.hpp"

using namespace freefrac;
using testing::poly;

namespace {

const Alphabet xyz = Alphabet::parse("x,y,z");

Als build(const std::string& text) { return als_from_poly(poly(xyz, text), 3); }

std::vector<std::string> factor_strings(const Factorization& f) {
  std::vector<std::string> out;
  for (const Als& q : f.factors) out.push_back(poly_of(q).str(xyz));
  return out;
}

}  // namespace

TEST_CASE("minimal polynomial multiplication adds ranks") {
  const Als p = build("x - y*z"), q = build("1 + z*x*y");
  const Als pq = poly_mul_minimal(p, q);
  CHECK(pq.dim() == p.dim() + q.dim() - 1);
  CHECK(poly_of(pq) == poly(xyz, "(x - y*z)*(1 + z*x*y)"));
  CHECK(rank(pq) == pq.dim());
}

TEST_CASE("both split shapes of x - xyx") {
  const Als p = build("x - x*y*x");
  REQUIRE(p.dim() == 4);
  const SplitSearch a = factor_split(p, 2);
  REQUIRE(a.split);
  CHECK(equal(a.split->left, build("x")).result == Verdict::equal_certified);
  CHECK(equal(a.split->right, build("1 - y*x")).result == Verdict::equal_certified);
  const SplitSearch b = factor_split(p, 3);
  REQUIRE(b.split);
  CHECK(equal(b.split->left, build("1 - x*y")).result == Verdict::equal_certified);
  CHECK(equal(b.split->right, build("x")).result == Verdict::equal_certified);
}

TEST_CASE("atoms") {
  const Factorization xyz3 = factorize_atoms(build("x*y*z"));
  CHECK(factor_strings(xyz3) == std::vector<std::string>{"x", "y", "z"});
  CHECK(verify_factorization(build("x*y*z"), xyz3));

  const Factorization atom = factorize_atoms(build("1 - x*y"));
  CHECK(atom.factors.size() == 1);
  CHECK(atom.certified);
  CHECK_FALSE(factor_split(build("1 - x*y"), 2).split);
  CHECK(factor_split(build("1 - x*y"), 2).exhaustive);
}

TEST_CASE("products of random polynomials factor back into their rank") {
  Rng rng = make_rng(23, 0);
  std::uniform_int_distribution<int> c(-2, 2), l(0, 2);
  for (int trial = 0; trial < 8; ++trial) {
    NcPoly p = NcPoly::monomial({static_cast<Letter>(l(rng))}) + NcPoly::constant(c(rng));
    NcPoly q = NcPoly::monomial({static_cast<Letter>(l(rng)), static_cast<Letter>(l(rng))}) +
               NcPoly::monomial({static_cast<Letter>(l(rng))}, c(rng)) + NcPoly::constant(1);
    const Als pq = als_from_poly(p * q, 3);
    const Factorization f = factorize_atoms(pq);
    CHECK(f.factors.size() >= 2);
    CHECK(verify_factorization(pq, f));
  }
}

TEST_CASE("contract violations") {
  CHECK_THROWS_AS(factor_split(build("x*y"), 3), ContractViolation);
  CHECK_THROWS_AS(poly_mul_minimal(build("x"), Als::scalar(2, 3)), ContractViolation);
}

TEST_CASE("rank four searches are exhaustive") {
  const Factorization atom = factorize_atoms(build("1 - x*y*z"));
  CHECK(atom.factors.size() == 1);
  CHECK(atom.certified);
  const SplitSearch s = factor_split(build("(2 + z)*(1 - 2*z + x*x)"), 2);
  REQUIRE(s.split);
  CHECK(poly_of(s.split->left) == poly(xyz, "1 + 1/2*z"));
  CHECK(s.exhaustive);
}

TEST_CASE("atom count does not depend on the split order") {
  const Als p = build("x - x*y*x");
  for (std::size_t n1 : {2u, 3u}) {
    const SplitSearch s = factor_split(p, n1);
    REQUIRE(s.split);
    const std::size_t atoms =
        factorize_atoms(s.split->left).factors.size() + factorize_atoms(s.split->right).factors.size();
    CHECK(atoms == factorize_atoms(p).factors.size());
  }
}

TEST_CASE("verification rejects the wrong order") {
  const Factorization wrong{{build("x"), build("1 - x*y")}, true};
  CHECK_FALSE(verify_factorization(build("x - x*y*x"), wrong));
  const Factorization right{{build("x"), build("1 - y*x")}, true};
  CHECK(verify_factorization(build("x - x*y*x"), right));
}
