// Linearized word problem and the evaluation oracle.
#include "freefrac/wordproblem.hpp"

#include <algorithm>

namespace freefrac {

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::equal_certified: return "equal-certified";
    case Verdict::unequal_certified: return "unequal-certified";
    case Verdict::equal_probabilistic: return "equal-probabilistic";
    case Verdict::unequal_witnessed: return "unequal-witnessed";
  }
  return "?";
}

std::optional<std::pair<RatMatrix, RatMatrix>> word_problem_witness(const Als& f, const Als& g) {
  const std::size_t n = f.dim();
  if (g.dim() != n) throw ContractViolation("word_problem_witness: dimensions differ");
  if (f.letters() != g.letters()) throw UserError("alphabet mismatch");
  const Pencil& af = f.matrix();
  const Pencil& ag = g.matrix();
  auto tv = [n](std::size_t i, std::size_t j) { return i * n + j; };
  auto uv = [n](std::size_t i, std::size_t j) { return n * n + i * n + j; };

  const std::size_t eqs = af.terms() * n * n + n + n;
  RatMatrix m(eqs, 2 * n * n);
  RatVector rhs(eqs);
  std::size_t e = 0;
  for (std::size_t l = 0; l < af.terms(); ++l)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++e) {
        for (std::size_t k = 0; k < n; ++k) {
          m(e, tv(i, k)) += ag[l](k, j);
          m(e, uv(k, j)) -= af[l](i, k);
        }
        if (j == 0) rhs[e] = af[l](i, 0);
      }
  for (std::size_t i = 0; i < n; ++i, ++e) {
    for (std::size_t k = 0; k < n; ++k) m(e, tv(i, k)) = g.rhs()[k];
    rhs[e] = f.rhs()[i];
  }
  for (std::size_t j = 0; j < n; ++j, ++e) m(e, uv(0, j)) = 1;

  const LinSolveResult sol = solve_linear(m, rhs);
  if (!sol.feasible) return std::nullopt;
  RatMatrix t(n, n), u(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t(i, j) = sol.particular[tv(i, j)];
      u(i, j) = sol.particular[uv(i, j)];
    }
  return std::pair{t, u};
}

EqualityVerdict equal(const Als& f, const Als& g, OracleOptions oracle) {
  if (f.letters() != g.letters()) throw UserError("alphabet mismatch");
  const Minimized mf = minimize(f);
  const Minimized mg = minimize(g);
  if (!mf.certified || !mg.certified) return equal_probabilistic(mf.als, mg.als, oracle);
  EqualityVerdict out;
  if (mf.als.dim() != mg.als.dim()) {
    out.result = Verdict::unequal_certified;
    return out;
  }
  out.transformation = word_problem_witness(mf.als, mg.als);
  out.result = out.transformation ? Verdict::equal_certified : Verdict::unequal_certified;
  return out;
}

EqualityVerdict equal_probabilistic(const Als& f, const Als& g, OracleOptions oracle) {
  if (f.letters() != g.letters()) throw UserError("alphabet mismatch");
  const std::size_t m = oracle.m ? oracle.m : std::max<std::size_t>({f.dim(), g.dim(), 1});
  const std::size_t budget = 10 * oracle.trials + 10;
  std::size_t defined = 0;
  for (std::size_t attempt = 0; attempt < budget && defined < oracle.trials; ++attempt) {
    Rng rng = make_rng(oracle.seed, attempt);
    MatrixPoint pt = random_point(f.letters(), m, rng);
    auto ef = als_eval(f, pt);
    if (!ef) continue;
    auto eg = als_eval(g, pt);
    if (!eg) continue;
    ++defined;
    if (*ef != *eg) {
      EqualityVerdict out;
      out.result = Verdict::unequal_witnessed;
      out.point = std::move(pt);
      return out;
    }
  }
  if (defined < oracle.trials)
    throw UserError("equality oracle inconclusive: too few regular sample points");
  return EqualityVerdict{};
}

std::size_t rank(const Als& f) { return minimize(f).als.dim(); }

bool is_zero(const Als& f) { return rank(f) == 0; }

}  // namespace freefrac
