// Block minimization steps, the polynomial and general minimization
// algorithms, and the exact minimality certificate.
#include "freefrac/minimize.hpp"

#include <sstream>

namespace freefrac {

namespace {

// Dense equations over a fixed number of unknowns.
class Equations {
 public:
  explicit Equations(std::size_t unknowns) : unknowns_(unknowns) {}
  RatVector& add(const Rational& rhs) {
    rows_.emplace_back(unknowns_);
    rhs_.push_back(rhs);
    return rows_.back();
  }
  LinSolveResult solve() const {
    RatMatrix m(rows_.size(), unknowns_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j = 0; j < unknowns_; ++j) m(i, j) = rows_[i][j];
    return solve_linear(m, rhs_);
  }

 private:
  std::size_t unknowns_;
  std::vector<RatVector> rows_;
  RatVector rhs_;
};

std::string compact(const RatMatrix& m) {
  auto row = [&](std::size_t i) {
    std::string s = "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + to_string(m(i, j));
    return s + "]";
  };
  if (m.rows() == 1) return row(0);
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) s += (i ? "," : "") + row(i);
  return s + "]";
}

std::string arrow(std::size_t from, std::size_t to) {
  return std::to_string(from) + "→" + std::to_string(to);
}

std::vector<std::size_t> without_range(std::size_t n, std::size_t begin, std::size_t end) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i < begin || i >= end) keep.push_back(i);
  return keep;
}

RatVector pick(const RatVector& v, const std::vector<std::size_t>& idx) {
  RatVector out;
  for (auto i : idx) out.push_back(v[i]);
  return out;
}

// Drops trailing rows and columns of a polynomial ALS whose rhs entries
// vanish; their unknowns are zero by back substitution.
Als trim_polynomial_tail(const Als& f) {
  std::size_t n = f.dim();
  while (n > 0 && f.rhs()[n - 1] == 0) --n;
  if (n == 0) return Als::zero(f.letters());
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i) keep.push_back(i);
  return Als(f.matrix().select(keep, keep), pick(f.rhs(), keep));
}

bool should_step_back(std::size_t k, std::size_t m) { return k > 2 && 2 * k > m + 1; }

// Incrementally maintained fully reduced echelon basis.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t n) : n_(n) {}
  bool add(RatVector x) {
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (x[pivots_[i]] != 0) {
        const Rational c = x[pivots_[i]];
        for (std::size_t j = 0; j < n_; ++j) x[j] -= c * basis_[i][j];
      }
    std::size_t p = 0;
    while (p < n_ && x[p] == 0) ++p;
    if (p == n_) return false;
    const Rational lead = x[p];
    for (auto& e : x) e /= lead;
    for (auto& b : basis_)
      if (b[p] != 0) {
        const Rational c = b[p];
        for (std::size_t j = 0; j < n_; ++j) b[j] -= c * x[j];
      }
    basis_.push_back(std::move(x));
    pivots_.push_back(p);
    return true;
  }
  std::size_t size() const { return basis_.size(); }
  const std::vector<RatVector>& vectors() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t n_;
  std::vector<RatVector> basis_;
  std::vector<std::size_t> pivots_;
};

// x -> x + a data: M_l = -A0'^{-1} A_l and v' = A0'^{-1} v.
struct ShiftedSeries {
  std::vector<Rational> shift;
  std::vector<RatMatrix> m;
  RatVector v;
};

std::optional<ShiftedSeries> regular_shift(const Als& f) {
  const std::size_t d = f.letters();
  const Pencil& a = f.matrix();
  Rng rng = make_rng(0x5eed, 17);
  std::uniform_int_distribution<int> dist(-3, 3);
  std::vector<Rational> shift(d, Rational(0));
  for (int attempt = 0; attempt < 40; ++attempt) {
    if (attempt > 0)
      for (auto& s : shift) s = dist(rng);
    RatMatrix a0 = a.constant();
    for (std::size_t l = 0; l < d; ++l)
      if (shift[l] != 0) a0 += a.letter(l) * shift[l];
    auto inv = invert(a0);
    if (!inv) continue;
    ShiftedSeries s{shift, {}, *inv * f.rhs()};
    for (std::size_t l = 0; l < d; ++l) s.m.push_back(-(*inv * a.letter(l)));
    return s;
  }
  return std::nullopt;
}

SpanBasis reachable(const std::vector<RatMatrix>& m, const RatVector& v) {
  SpanBasis span(v.size());
  std::vector<RatVector> queue;
  if (span.add(v)) queue.push_back(v);
  while (!queue.empty()) {
    RatVector x = std::move(queue.back());
    queue.pop_back();
    for (const auto& ml : m) {
      RatVector y = ml * x;
      if (span.add(y)) queue.push_back(std::move(y));
    }
  }
  return span;
}

SpanBasis observable(const std::vector<RatMatrix>& m, const RatVector& u) {
  SpanBasis span(u.size());
  std::vector<RatVector> queue;
  if (span.add(u)) queue.push_back(u);
  while (!queue.empty()) {
    RatVector x = std::move(queue.back());
    queue.pop_back();
    for (const auto& ml : m) {
      RatVector y = row_times(x, ml);
      if (span.add(y)) queue.push_back(std::move(y));
    }
  }
  return span;
}

}  // namespace

std::string Trace::str() const {
  std::string s;
  for (const auto& l : lines) s += l + '\n';
  return s;
}

std::size_t PivotStructure::offset(std::size_t k) const {
  std::size_t o = 0;
  for (std::size_t i = 0; i < k && i < sizes.size(); ++i) o += sizes[i];
  return o;
}

std::string PivotStructure::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < sizes.size(); ++i)
    s += (i ? "," : "") + std::to_string(sizes[i]);
  return s + "]";
}

PivotStructure pivot_structure(const Als& f) {
  const std::size_t n = f.dim();
  PivotStructure ps;
  std::size_t start = 0;
  for (std::size_t b = 1; b <= n; ++b)
    if (b == n || f.matrix().block_zero(b, 0, n - b, b)) {
      ps.sizes.push_back(b - start);
      start = b;
    }
  return ps;
}

std::optional<MinStep> left_min_step(const Als& f, std::size_t k, bool pin_first_column) {
  const PivotStructure ps = pivot_structure(f);
  if (k < 1 || k > ps.count()) throw ContractViolation("left_min_step: block index out of range");
  const std::size_t n = f.dim(), o = ps.offset(k - 1), s = ps.sizes[k - 1];
  const std::size_t rest = o + s, r = n - rest;
  const bool u_free = !(pin_first_column && k == 1);
  const std::size_t nt = s * r, nu = u_free ? s * r : 0;
  auto tv = [&](std::size_t i, std::size_t q) { return i * r + q; };
  auto uv = [&](std::size_t p, std::size_t j) { return nt + p * r + j; };

  Equations eq(nt + nu);
  for (std::size_t l = 0; l < f.matrix().terms(); ++l) {
    const RatMatrix& a = f.matrix()[l];
    for (std::size_t i = 0; i < s; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        RatVector& row = eq.add(-a(o + i, rest + j));
        if (u_free)
          for (std::size_t p = 0; p < s; ++p) row[uv(p, j)] += a(o + i, o + p);
        for (std::size_t q = 0; q < r; ++q) row[tv(i, q)] += a(rest + q, rest + j);
      }
  }
  for (std::size_t i = 0; i < s; ++i) {
    RatVector& row = eq.add(-f.rhs()[o + i]);
    for (std::size_t q = 0; q < r; ++q) row[tv(i, q)] = f.rhs()[rest + q];
  }
  const LinSolveResult sol = eq.solve();
  if (!sol.feasible) return std::nullopt;

  MinStep step{Als::zero(f.letters()), RatMatrix(s, r), RatMatrix(s, r),
               Transformation::identity(n)};
  step.applied.shape = TransformShape::block;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      step.t(i, j) = sol.particular[tv(i, j)];
      if (u_free) step.u(i, j) = sol.particular[uv(i, j)];
      step.applied.p(o + i, rest + j) = step.t(i, j);
      step.applied.q(o + i, rest + j) = step.u(i, j);
    }
  if (!u_free) return step;  // first block pinned: the element is zero

  const Pencil a2 = f.matrix().transformed(step.applied.p, step.applied.q);
  const RatVector v2 = step.applied.p * f.rhs();
  if (!a2.block_zero(o, rest, s, r))
    throw InvariantFailure("left_min_step: block row not cleared");
  for (std::size_t i = 0; i < s; ++i)
    if (v2[o + i] != 0) throw InvariantFailure("left_min_step: rhs block not cleared");

  const auto keep = without_range(n, o, rest);
  if (k > 1) {
    step.reduced = Als(a2.select(keep, keep), pick(v2, keep));
  } else {
    step.applied.shape = TransformShape::general;
    // u Q restricted to the remaining columns.
    LinearRepresentation rep{pick(step.applied.q.row(0), keep), a2.select(keep, keep),
                             pick(v2, keep)};
    step.reduced = r == 0 ? Als::zero(f.letters()) : to_admissible(rep);
  }
  return step;
}

std::optional<MinStep> right_min_step(const Als& f, std::size_t k) {
  const PivotStructure ps = pivot_structure(f);
  if (k < 2 || k > ps.count()) throw ContractViolation("right_min_step: block index out of range");
  const std::size_t n = f.dim(), o = ps.offset(k - 1), s = ps.sizes[k - 1];
  const std::size_t b = o;
  auto tv = [&](std::size_t i, std::size_t q) { return i * s + q; };
  auto uv = [&](std::size_t p, std::size_t j) { return b * s + p * s + j; };

  Equations eq(2 * b * s);
  for (std::size_t l = 0; l < f.matrix().terms(); ++l) {
    const RatMatrix& a = f.matrix()[l];
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < s; ++j) {
        RatVector& row = eq.add(-a(i, o + j));
        for (std::size_t p = 0; p < b; ++p) row[uv(p, j)] += a(i, p);
        for (std::size_t q = 0; q < s; ++q) row[tv(i, q)] += a(o + q, o + j);
      }
  }
  for (std::size_t j = 0; j < s; ++j) eq.add(0)[uv(0, j)] = 1;
  const LinSolveResult sol = eq.solve();
  if (!sol.feasible) return std::nullopt;

  MinStep step{Als::zero(f.letters()), RatMatrix(b, s), RatMatrix(b, s),
               Transformation::identity(n)};
  step.applied.shape = TransformShape::block;
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < s; ++j) {
      step.t(i, j) = sol.particular[tv(i, j)];
      step.u(i, j) = sol.particular[uv(i, j)];
      step.applied.p(i, o + j) = step.t(i, j);
      step.applied.q(i, o + j) = step.u(i, j);
    }
  const Als g = apply_transformation(f, step.applied);
  if (!g.matrix().block_zero(0, o, b, s))
    throw InvariantFailure("right_min_step: block column not cleared");
  const auto keep = without_range(n, o, o + s);
  step.reduced = Als(g.matrix().select(keep, keep), pick(g.rhs(), keep));
  return step;
}

std::optional<Als> extended_left_step(const Als& f) {
  auto step = left_min_step(f, 1, false);
  if (!step) return std::nullopt;
  return step->reduced;
}

Als standardize(const Als& f) {
  if (f.is_zero_system()) return f;
  Transformation t = Transformation::identity(f.dim());
  t.p = rhs_normalizer(f.rhs());
  return apply_transformation(f, t);
}

Als minimize_polynomial(const Als& input, Trace* trace) {
  if (!is_polynomial_shape(input))
    throw ContractViolation("minimize_polynomial: input is not a polynomial ALS");
  Als f = trim_polynomial_tail(input);
  std::size_t k = 2;
  while (k <= f.dim()) {
    const std::size_t n = f.dim(), kk = n + 1 - k;
    if (auto st = left_min_step(f, kk)) {
      if (kk == 1) {
        if (trace) trace->add("L k=1 dim " + arrow(n, 0));
        return Als::zero(f.letters());
      }
      if (trace)
        trace->add("L k=" + std::to_string(kk) + " dim " + arrow(n, n - 1) +
                   " T=" + compact(st->t) + " U=" + compact(st->u));
      f = st->reduced;
      if (should_step_back(k, n)) --k;
      continue;
    }
    if (k >= 2 && k <= n) {
      if (auto st = right_min_step(f, k)) {
        if (trace)
          trace->add("R k=" + std::to_string(k) + " dim " + arrow(n, n - 1) +
                     " T=" + compact(st->t) + " U=" + compact(st->u));
        f = st->reduced;
        if (should_step_back(k, n)) --k;
        continue;
      }
    }
    ++k;
  }
  return standardize(f);
}

Als minimize_general(const Als& input, Trace* trace, GeneralOptions options) {
  Als f = input;
  if (f.is_zero_system()) return f;
  if (is_zero(f.rhs())) {
    if (trace) trace->add("ZERO rhs");
    return Als::zero(f.letters());
  }
  std::size_t k = 1;
  while (!f.is_zero_system()) {
    const PivotStructure ps = pivot_structure(f);
    const std::size_t m = ps.count(), n = f.dim();
    if (k > m) break;
    const std::size_t kk = m + 1 - k;
    if (kk >= 2) {
      if (auto st = left_min_step(f, kk)) {
        f = st->reduced;
        if (trace)
          trace->add("L k=" + std::to_string(kk) + " dim " + arrow(n, f.dim()) +
                     " T=" + compact(st->t) + " U=" + compact(st->u));
        if (should_step_back(k, m)) --k;
        continue;
      }
    } else if (auto st = left_min_step(f, 1, false)) {
      f = st->reduced;
      if (trace)
        trace->add("L k=1 extended dim " + arrow(n, f.dim()) + " T=" + compact(st->t) +
                   " U=" + compact(st->u));
      if (options.decrement_after_first_block && should_step_back(k, m)) --k;
      continue;
    }
    if (k >= 2) {
      if (auto st = right_min_step(f, k)) {
        f = st->reduced;
        if (trace)
          trace->add("R k=" + std::to_string(k) + " dim " + arrow(n, f.dim()) +
                     " T=" + compact(st->t) + " U=" + compact(st->u));
        if (should_step_back(k, m)) --k;
        continue;
      }
    }
    ++k;
  }
  return f;
}

std::optional<bool> is_minimal_exact(const Als& f) {
  if (f.is_zero_system()) return true;
  auto series = regular_shift(f);
  if (!series) return std::nullopt;
  const std::size_t n = f.dim();
  return reachable(series->m, series->v).size() == n &&
         observable(series->m, f.u()).size() == n;
}

std::optional<Als> reduce_by_series(const Als& f) {
  const std::size_t d = f.letters();
  if (f.is_zero_system()) return f;
  auto series = regular_shift(f);
  if (!series) return std::nullopt;

  // Restrict to the reachable space; the basis is the identity on its pivots.
  const SpanBasis reach = reachable(series->m, series->v);
  const std::size_t r = reach.size();
  if (r == 0) return Als::zero(d);
  const auto& rb = reach.vectors();
  const auto& rp = reach.pivots();
  std::vector<RatMatrix> n_l(d, RatMatrix(r, r));
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t j = 0; j < r; ++j) {
      const RatVector img = series->m[l] * rb[j];
      for (std::size_t i = 0; i < r; ++i) n_l[l](i, j) = img[rp[i]];
    }
  RatVector c(r), u(r);
  for (std::size_t i = 0; i < r; ++i) c[i] = series->v[rp[i]];
  for (std::size_t j = 0; j < r; ++j) u[j] = rb[j][0];

  // Then to the observable space of the restricted system.
  const SpanBasis obs = observable(n_l, u);
  const std::size_t o = obs.size();
  if (o == 0) return Als::zero(d);
  const auto& ob = obs.vectors();
  const auto& op = obs.pivots();
  std::vector<RatMatrix> k_l(d, RatMatrix(o, o));
  for (std::size_t l = 0; l < d; ++l)
    for (std::size_t i = 0; i < o; ++i) {
      const RatVector img = row_times(ob[i], n_l[l]);
      for (std::size_t j = 0; j < o; ++j) k_l[l](i, j) = img[op[j]];
    }
  RatVector e(o), cv(o);
  for (std::size_t j = 0; j < o; ++j) e[j] = u[op[j]];
  for (std::size_t i = 0; i < o; ++i) cv[i] = dot(ob[i], c);

  // Undo the shift: I - sum_l K_l (x_l - a_l).
  Pencil a(o, d);
  a.constant() = RatMatrix::identity(o);
  for (std::size_t l = 0; l < d; ++l) {
    a.constant() += k_l[l] * series->shift[l];
    a.letter(l) = -k_l[l];
  }
  return to_admissible({e, std::move(a), cv});
}

Minimized minimize(const Als& f, Trace* trace) {
  if (f.is_zero_system() || is_zero(f.rhs()))
    return {Als::zero(f.letters()), true, RefineStatus::certified};

  Minimized out{f, false, RefineStatus::best_effort};
  if (is_polynomial_shape(f)) {
    out.als = minimize_polynomial(f, trace);
    out.refinement = RefineStatus::certified;
  } else {
    std::size_t before = f.dim() + 1;
    Als g = f;
    // Refinement may expose further steps after a reduction.
    for (int round = 0; round < 4 && g.dim() < before && !g.is_zero_system(); ++round) {
      before = g.dim();
      RefineResult refined = refine_pivots(g, trace);
      out.refinement = refined.status;
      g = minimize_general(refined.als, trace);
    }
    out.als = g;
  }
  const auto exact = is_minimal_exact(out.als);
  if (exact == true) {
    out.certified = true;
  } else if (exact == false) {
    auto reduced = reduce_by_series(out.als);
    if (!reduced) throw InvariantFailure("minimize: regular shift lost");
    if (trace)
      trace->add("SERIES dim " + arrow(out.als.dim(), reduced->dim()));
    out.als = *reduced;
    out.certified = is_minimal_exact(out.als).value_or(false);
    if (!out.certified) throw InvariantFailure("minimize: series reduction not minimal");
  } else {
    out.certified = out.refinement == RefineStatus::certified;
  }
  return out;
}

Als als_from_poly(const NcPoly& p, std::size_t letters) {
  if (p.is_zero()) return Als::zero(letters);
  std::optional<Als> acc;
  for (const auto& [w, c] : p.terms()) {
    Als term = als_scale(als_monomial(w, letters), c);
    acc = acc ? als_add(*acc, term) : term;
  }
  return minimize_polynomial(*acc);
}

}  // namespace freefrac
