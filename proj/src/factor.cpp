// Polynomial factorization through upper right zero blocks.
#include "freefrac/factor.hpp"

namespace freefrac {

namespace {

using Position = std::pair<std::size_t, std::size_t>;

// Free entries of a polynomial factorization transformation that can touch
// the zero block: P is upper unitriangular with last column e_n, Q upper
// unitriangular with first row e_1.
struct Layout {
  std::size_t n, n1;
  bool in_block(std::size_t i, std::size_t j) const { return i + 2 <= n1 && j >= n1; }
  std::vector<Position> p_entries(std::size_t from_col) const {
    std::vector<Position> out;
    for (std::size_t i = 0; i + 2 <= n1; ++i)
      for (std::size_t k = std::max(i + 1, from_col); k + 2 <= n; ++k) out.emplace_back(i, k);
    return out;
  }
  std::vector<Position> q_entries(std::size_t below_row) const {
    std::vector<Position> out;
    for (std::size_t j = n1; j < n; ++j)
      for (std::size_t m = 1; m < std::min(j, below_row); ++m) out.emplace_back(m, j);
    return out;
  }
};

// Linear conditions for (P A Q)[block] = 0 where P = I + sum over p_pos and
// Q = I + sum over q_pos, assuming every cross term
// P A Q - A - (P - I) A - A (Q - I) vanishes on the block.
struct SplitSystem {
  RatMatrix m;
  RatVector rhs;
};

SplitSystem split_system(const Pencil& a, const Layout& lay, const std::vector<Position>& p_pos,
                         const std::vector<Position>& q_pos) {
  const std::size_t n = lay.n;
  const std::size_t unknowns = p_pos.size() + q_pos.size();
  std::vector<RatVector> rows;
  RatVector rhs;
  for (std::size_t l = 0; l < a.terms(); ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!lay.in_block(i, j)) continue;
        RatVector row(unknowns);
        for (std::size_t x = 0; x < p_pos.size(); ++x)
          if (p_pos[x].first == i) row[x] = a[l](p_pos[x].second, j);
        for (std::size_t x = 0; x < q_pos.size(); ++x)
          if (q_pos[x].second == j) row[p_pos.size() + x] = a[l](i, q_pos[x].first);
        rows.push_back(std::move(row));
        rhs.push_back(-a[l](i, j));
      }
  RatMatrix m(rows.size(), unknowns);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < unknowns; ++c) m(r, c) = rows[r][c];
  return {std::move(m), std::move(rhs)};
}

Transformation split_transformation(std::size_t n, const std::vector<Position>& p_pos,
                                    const std::vector<Position>& q_pos, const RatVector& x) {
  Transformation t = Transformation::identity(n);
  t.shape = TransformShape::polynomial_factorization;
  for (std::size_t k = 0; k < p_pos.size(); ++k) t.p(p_pos[k].first, p_pos[k].second) = x[k];
  for (std::size_t k = 0; k < q_pos.size(); ++k)
    t.q(q_pos[k].first, q_pos[k].second) = x[p_pos.size() + k];
  return t;
}

std::optional<Transformation> solve_linear_split(const Pencil& a, const Layout& lay,
                                                 const std::vector<Position>& p_pos,
                                                 const std::vector<Position>& q_pos) {
  const SplitSystem sys = split_system(a, lay, p_pos, q_pos);
  const LinSolveResult sol = solve_linear(sys.m, sys.rhs);
  if (!sol.feasible) return std::nullopt;
  return split_transformation(lay.n, p_pos, q_pos, sol.particular);
}

bool clears_block(const Pencil& a, const Layout& lay, const Transformation& t) {
  return a.transformed(t.p, t.q).block_zero(0, lay.n1, lay.n1 - 1, lay.n - lay.n1);
}

// Fix one side at random integer entries and solve the other.
std::optional<Transformation> alternate(const Pencil& a, const Layout& lay) {
  std::uniform_int_distribution<int> dist(-2, 2);
  const auto p_pos = lay.p_entries(0);
  const auto q_pos = lay.q_entries(lay.n);
  for (std::size_t pass = 0; pass < 8; ++pass) {
    Rng rng = make_rng(0xfac7, pass);
    Transformation fixed = Transformation::identity(lay.n);
    if (pass % 2 == 0) {
      for (auto [i, k] : p_pos) fixed.p(i, k) = dist(rng);
      Pencil b = a.transformed(fixed.p, RatMatrix::identity(lay.n));
      if (auto t = solve_linear_split(b, lay, {}, q_pos)) {
        t->p = fixed.p;
        if (clears_block(a, lay, *t)) return t;
      }
    } else {
      for (auto [m, j] : q_pos) fixed.q(m, j) = dist(rng);
      Pencil b = a.transformed(RatMatrix::identity(lay.n), fixed.q);
      if (auto t = solve_linear_split(b, lay, p_pos, {})) {
        t->q = fixed.q;
        if (clears_block(a, lay, *t)) return t;
      }
    }
  }
  return std::nullopt;
}

// Rank 3, n1 = 2: the only block entry is
// A_13 + beta A_12 + alpha A_23 + alpha beta A_22, linear in the letters and
// bilinear in the constant part.
std::optional<Transformation> solve_rank_three(const Pencil& a) {
  RatMatrix m(a.letters(), 2);
  RatVector rhs(a.letters());
  for (std::size_t l = 0; l < a.letters(); ++l) {
    const RatMatrix& c = a.letter(l);
    m(l, 0) = c(1, 2);
    m(l, 1) = c(0, 1);
    rhs[l] = -c(0, 2);
  }
  const LinSolveResult sol = solve_linear(m, rhs);
  if (!sol.feasible) return std::nullopt;
  const RatMatrix& k = a.constant();
  std::optional<std::pair<Rational, Rational>> ab;
  auto residual = [&](const Rational& al, const Rational& be) -> Rational {
    return k(0, 2) + be * k(0, 1) + al * k(1, 2) + al * be;
  };
  if (sol.nullspace.empty()) {
    const Rational& al = sol.particular[0];
    const Rational& be = sol.particular[1];
    if (residual(al, be) == 0) ab = {al, be};
  } else if (sol.nullspace.size() == 1) {
    const Rational pa = sol.particular[0], pb = sol.particular[1];
    const Rational da = sol.nullspace[0][0], db = sol.nullspace[0][1];
    const Rational c2 = da * db;
    const Rational c1 = db * k(0, 1) + da * k(1, 2) + pa * db + da * pb;
    const Rational c0 = residual(pa, pb);
    if (c0 == 0 && c1 == 0 && c2 == 0) {
      ab = {pa, pb};
    } else {
      auto roots = quadratic_rational_roots(c0, c1, c2);
      if (!roots.empty()) ab = {pa + roots[0] * da, pb + roots[0] * db};
    }
  } else {
    // (alpha + A_12)(beta + A_23) = A_12 A_23 - A_13 always has a solution.
    const Rational al = 1 - k(0, 1);
    const Rational be = k(0, 1) * k(1, 2) - k(0, 2) - k(1, 2);
    ab = {al, be};
  }
  if (!ab) return std::nullopt;
  Transformation t = Transformation::identity(3);
  t.shape = TransformShape::polynomial_factorization;
  t.p(0, 1) = ab->first;
  t.q(1, 2) = ab->second;
  return t;
}

Als minimal_polynomial(const Als& p) {
  if (!is_polynomial_shape(p)) throw ContractViolation("expected a polynomial ALS");
  return minimize_polynomial(p);
}

// Rank 4. For n1 = 2 only row 0 of P and columns 2, 3 of Q touch the block.
// With w = row 0 of P A the block is w_1 Q_12 + w_2 and
// w_1 Q_13 + w_2 Q_23 + w_3; the first forces w_2 = -Q_12 w_1, so Q_23 = 0
// loses nothing. Fixing t = P_01 leaves a system linear in P_02, Q_12, Q_13
// with coefficients affine in t. n1 = 3 mirrors this with t = Q_23, P_01 = 0.
struct RankFourSearch {
  std::optional<Transformation> found;
  bool complete = true;
};

RankFourSearch solve_rank_four(const Pencil& a, std::size_t n1) {
  const Layout lay{4, n1};
  const RatMatrix id = RatMatrix::identity(4);
  const std::vector<Position> p_pos =
      n1 == 2 ? std::vector<Position>{{0, 2}} : std::vector<Position>{{0, 2}, {1, 2}};
  const std::vector<Position> q_pos =
      n1 == 2 ? std::vector<Position>{{1, 2}, {1, 3}} : std::vector<Position>{{1, 3}};
  const Position param = n1 == 2 ? Position{0, 1} : Position{2, 3};
  auto system_at = [&](const Rational& t) {
    RatMatrix e = id;
    e(param.first, param.second) = t;
    return split_system(n1 == 2 ? a.transformed(e, id) : a.transformed(id, e), lay, p_pos, q_pos);
  };
  const SplitSystem s0 = system_at(0), s1 = system_at(1);
  RatVector dr(s0.rhs.size());
  for (std::size_t i = 0; i < dr.size(); ++i) dr[i] = s1.rhs[i] - s0.rhs[i];
  const AffineFamilySearch fam = solve_affine_family(s0.m, s1.m - s0.m, s0.rhs, dr);
  RankFourSearch out;
  out.complete = fam.complete;
  if (!fam.solution) return out;
  Transformation t = split_transformation(4, p_pos, q_pos, fam.solution->y);
  (n1 == 2 ? t.p : t.q)(param.first, param.second) = fam.solution->t;
  out.found = t;
  return out;
}

// Moves a scalar from q1 to q2 so the ShortLex-least term of q1 has
// coefficient 1.
void normalize_pair(Als& q1, Als& q2) {
  const NcPoly p = poly_of(q1);
  const Rational c = p.terms().begin()->second;
  if (c == 1) return;
  q1 = als_scale(q1, 1 / c);
  q2 = als_scale(q2, c);
}

}  // namespace

Als poly_mul_minimal(const Als& p, const Als& q) {
  if (!is_polynomial_shape(p) || !is_polynomial_shape(q))
    throw ContractViolation("poly_mul_minimal: operands must be polynomial systems");
  if (p.dim() < 2 || q.dim() < 2)
    throw ContractViolation("poly_mul_minimal: scalar operand");
  return als_mul_type1(standardize(p), standardize(q));
}

NcPoly poly_of(const Als& p) {
  if (p.is_zero_system()) return {};
  if (!is_polynomial_shape(p)) throw ContractViolation("poly_of: not a polynomial ALS");
  return als_expand(p, p.dim()).terms;
}

SplitSearch factor_split(const Als& input, std::size_t n1) {
  const Als p = minimal_polynomial(input);
  const std::size_t n = p.dim();
  if (n < 3 || n1 < 2 || n1 + 1 > n)
    throw ContractViolation("factor_split: needs rank >= 3 and 2 <= n1 <= rank - 1");
  const Layout lay{n, n1};
  const Pencil& a = p.matrix();

  std::optional<Transformation> found;
  bool exhaustive = false;
  if (n == 3) {
    found = solve_rank_three(a);
    exhaustive = true;
  } else if (n == 4) {
    const RankFourSearch r = solve_rank_four(a, n1);
    found = r.found;
    exhaustive = r.complete;
  } else {
    // Cut c: P only uses columns >= c and Q only rows < c, so the cross term
    // meets A below its diagonal. c = 1 is rows-only, c = n - 1 columns-only.
    for (std::size_t c = 1; c < n && !found; ++c)
      found = solve_linear_split(a, lay, lay.p_entries(c), lay.q_entries(c));
    if (!found) found = alternate(a, lay);
  }
  SplitSearch out;
  out.exhaustive = exhaustive;
  if (!found) return out;
  if (!clears_block(a, lay, *found))
    throw InvariantFailure("factor_split: zero block not created");

  const Als t = apply_transformation(p, *found);
  const std::size_t n2 = n + 1 - n1;
  Als left(t.matrix().block(0, 0, n1, n1), unit_vector(n1, n1 - 1));
  RatVector v2(t.rhs().begin() + static_cast<std::ptrdiff_t>(n1 - 1), t.rhs().end());
  Als right(t.matrix().block(n1 - 1, n1 - 1, n2, n2), std::move(v2));
  left = minimal_polynomial(left);
  right = minimal_polynomial(right);
  normalize_pair(left, right);
  if (left.dim() != n1 || right.dim() != n2)
    throw InvariantFailure("factor_split: factors are not of the expected rank");
  if (equal(poly_mul_minimal(left, right), p).result != Verdict::equal_certified)
    throw InvariantFailure("factor_split: product does not reproduce the input");
  out.split = Split{std::move(left), std::move(right), *found};
  return out;
}

Factorization factorize_atoms(const Als& input) {
  const Als p = minimal_polynomial(minimize(input).als);
  const std::size_t n = p.dim();
  if (n <= 2) return {{p}, true};
  bool exhaustive = true;
  for (std::size_t n1 = 2; n1 < n; ++n1) {
    SplitSearch s = factor_split(p, n1);
    if (!s.split) {
      exhaustive = exhaustive && s.exhaustive;
      continue;
    }
    Factorization left = factorize_atoms(s.split->left);
    Factorization right = factorize_atoms(s.split->right);
    left.factors.insert(left.factors.end(), right.factors.begin(), right.factors.end());
    left.certified = left.certified && right.certified;
    return left;
  }
  return {{p}, exhaustive};
}

bool verify_factorization(const Als& p, const Factorization& f) {
  if (f.factors.empty()) return false;
  const std::size_t n = rank(p);
  std::size_t expected = 1;
  for (const Als& q : f.factors) expected += q.dim() - 1;
  if (expected != n) return false;
  Als product = f.factors.front();
  for (std::size_t i = 1; i < f.factors.size(); ++i)
    product = poly_mul_minimal(product, f.factors[i]);
  return equal(product, p).result == Verdict::equal_certified;
}

}  // namespace freefrac
