#pragma once

#include <string>
#include <vector>

#include "freefrac/expr.hpp"
#include "freefrac/factor.hpp"
#include "freefrac/session.hpp"

namespace testing {

using namespace freefrac;

// Polynomial value of an inverse-free expression by direct NcPoly arithmetic.
inline NcPoly poly_from_expr(const Expr& e) {
  using K = ExprNode::Kind;
  switch (e->kind) {
    case K::scalar: return NcPoly::constant(e->value);
    case K::letter: return NcPoly::monomial({static_cast<Letter>(e->letter)});
    case K::add: return poly_from_expr(e->lhs) + poly_from_expr(e->rhs);
    case K::mul: return poly_from_expr(e->lhs) * poly_from_expr(e->rhs);
    case K::neg: return -poly_from_expr(e->lhs);
    case K::pow: {
      if (e->exponent < 0) break;
      NcPoly acc = NcPoly::constant(1);
      const NcPoly b = poly_from_expr(e->lhs);
      for (long i = 0; i < e->exponent; ++i) acc = acc * b;
      return acc;
    }
    default: break;
  }
  throw std::invalid_argument("poly_from_expr: not a polynomial expression");
}

inline NcPoly poly(const Alphabet& a, const std::string& text) {
  return poly_from_expr(parse_expr(text, a));
}

// System from affine entry texts; "" and "." denote zero.
inline Als make_als(const Alphabet& a, const std::vector<std::vector<std::string>>& grid,
                    const std::vector<std::string>& rhs) {
  const std::size_t n = grid.size();
  Pencil p(n, a.size());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::string& t = grid[i].at(j);
      if (t.empty() || t == ".") continue;
      p.set_entry(i, j, poly(a, t));
    }
  RatVector v;
  for (const auto& t : rhs) v.push_back(t.empty() || t == "." ? Rational(0) : parse_rational(t));
  return Als(std::move(p), std::move(v));
}

inline RatMatrix mat(const std::vector<std::vector<Rational>>& rows) {
  return RatMatrix::from_rows(rows);
}

// Independent oracle: evaluation at random matrix points.
inline bool same_element(const Als& f, const Als& g, std::uint64_t seed = 7) {
  return equal_probabilistic(f, g, {8, 0, seed}).equal();
}

inline Als random_admissible_transform(const Als& f, Rng& rng) {
  const std::size_t n = f.dim();
  std::uniform_int_distribution<int> dist(-3, 3);
  for (;;) {
    Transformation t{RatMatrix(n, n), RatMatrix(n, n), TransformShape::admissible};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        t.p(i, j) = dist(rng);
        t.q(i, j) = i == 0 ? Rational(j == 0 ? 1 : 0) : Rational(dist(rng));
      }
    if (invert(t.p) && invert(t.q)) return apply_transformation(f, t);
  }
}

}  // namespace testing
