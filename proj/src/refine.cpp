// Refinement of pivot blocks.
#include <algorithm>
#include <array>
#include <numeric>

#include "freefrac/minimize.hpp"

namespace freefrac {

namespace {

constexpr std::size_t kMaxSubsetBlock = 12;
constexpr std::size_t kMaxAnsatzBlock = 6;

using Index = std::vector<std::size_t>;

std::vector<Index> subsets(const Index& from, std::size_t size) {
  std::vector<Index> out;
  Index cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < from.size(); ++i) {
      cur.push_back(from[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

Index complement(const Index& all, const Index& part) {
  Index out;
  for (auto i : all)
    if (std::find(part.begin(), part.end(), i) == part.end()) out.push_back(i);
  return out;
}

bool zero_on(const Pencil& a, const Index& rows, const Index& cols) {
  for (auto i : rows)
    for (auto j : cols)
      if (!a.entry_zero(i, j)) return false;
  return true;
}

// Permutation moving rows `bottom` of the block to its end and columns `left`
// to its start, each group in ascending order.
Transformation block_permutation(std::size_t n, const Index& block, const Index& bottom,
                                 const Index& left) {
  Index row_order = complement(block, bottom);
  row_order.insert(row_order.end(), bottom.begin(), bottom.end());
  Index col_order = left;
  const Index right = complement(block, left);
  col_order.insert(col_order.end(), right.begin(), right.end());
  Transformation t{RatMatrix(n, n), RatMatrix(n, n), TransformShape::admissible};
  std::vector<std::size_t> rp(n), cp(n);
  std::iota(rp.begin(), rp.end(), 0);
  std::iota(cp.begin(), cp.end(), 0);
  for (std::size_t i = 0; i < block.size(); ++i) {
    rp[block[i]] = row_order[i];
    cp[block[i]] = col_order[i];
  }
  for (std::size_t i = 0; i < n; ++i) {
    t.p(i, rp[i]) = 1;
    t.q(cp[i], i) = 1;
  }
  return t;
}

Transformation compose(const Transformation& first, const Transformation& then) {
  return {then.p * first.p, first.q * then.q, TransformShape::admissible};
}

// Zero pattern by rows and columns only.
std::optional<BlockSplit> split_by_permutation(const Als& f, const Index& block) {
  const std::size_t s = block.size();
  if (s > kMaxSubsetBlock) return std::nullopt;
  const bool holds_first = block.front() == 0;
  for (std::size_t c = 1; c < s; ++c)
    for (const Index& cols : subsets(block, c)) {
      if (holds_first && cols.front() != 0) continue;
      Index rows;
      for (auto i : block)
        if (zero_on(f.matrix(), {i}, cols)) rows.push_back(i);
      if (rows.size() < s - c) continue;
      rows.resize(s - c);
      const Transformation id = Transformation::identity(f.dim());
      return BlockSplit{rows, cols, id, block_permutation(f.dim(), block, rows, cols)};
    }
  return std::nullopt;
}

// P = I + alpha, Q = I + beta with the cross term alpha A beta vanishing by
// construction, so the conditions on the R x C block are linear.
std::optional<BlockSplit> split_by_ansatz(const Als& f, const Index& block) {
  const std::size_t s = block.size(), n = f.dim();
  if (s > kMaxAnsatzBlock) return std::nullopt;
  const Pencil& a = f.matrix();
  const bool holds_first = block.front() == 0;
  for (std::size_t c = 1; c < s; ++c)
    for (const Index& cols : subsets(block, c)) {
      if (holds_first && cols.front() != 0) continue;
      const Index other_cols = complement(block, cols);
      for (const Index& rows : subsets(block, s - c)) {
        const Index other_rows = complement(block, rows);
        for (int variant = 0; variant < 2; ++variant) {
          Index alpha_src = other_rows, beta_src;
          for (auto q : other_cols)
            if (q != 0) beta_src.push_back(q);
          if (variant == 0) {
            std::erase_if(beta_src, [&](std::size_t q) { return !zero_on(a, other_rows, {q}); });
          } else {
            std::erase_if(alpha_src, [&](std::size_t p) { return !zero_on(a, {p}, other_cols); });
          }
          const std::size_t na = rows.size() * alpha_src.size();
          const std::size_t nb = beta_src.size() * cols.size();
          if (na + nb == 0) continue;
          RatMatrix m(a.terms() * rows.size() * cols.size(), na + nb);
          RatVector rhs(m.rows());
          std::size_t eq = 0;
          for (std::size_t l = 0; l < a.terms(); ++l)
            for (std::size_t i = 0; i < rows.size(); ++i)
              for (std::size_t j = 0; j < cols.size(); ++j, ++eq) {
                rhs[eq] = -a[l](rows[i], cols[j]);
                for (std::size_t p = 0; p < alpha_src.size(); ++p)
                  m(eq, i * alpha_src.size() + p) = a[l](alpha_src[p], cols[j]);
                for (std::size_t q = 0; q < beta_src.size(); ++q)
                  m(eq, na + q * cols.size() + j) = a[l](rows[i], beta_src[q]);
              }
          const LinSolveResult sol = solve_linear(m, rhs);
          if (!sol.feasible) continue;
          Transformation t = Transformation::identity(n);
          for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t p = 0; p < alpha_src.size(); ++p)
              t.p(rows[i], alpha_src[p]) = sol.particular[i * alpha_src.size() + p];
          for (std::size_t q = 0; q < beta_src.size(); ++q)
            for (std::size_t j = 0; j < cols.size(); ++j)
              t.q(beta_src[q], cols[j]) = sol.particular[na + q * cols.size() + j];
          return BlockSplit{rows, cols, t, compose(t, block_permutation(n, block, rows, cols))};
        }
      }
    }
  return std::nullopt;
}

Rational det2(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return a * d - b * c;
}

}  // namespace

std::optional<BlockSplit> split_block_linear(const Als& f, std::size_t offset, std::size_t size) {
  if (size < 2 || offset + size > f.dim())
    throw ContractViolation("split_block_linear: block out of range");
  Index block(size);
  std::iota(block.begin(), block.end(), offset);
  if (auto s = split_by_permutation(f, block)) return s;
  return split_by_ansatz(f, block);
}

std::optional<Transformation> split_two_block(const Als& f, std::size_t offset) {
  const std::size_t n = f.dim();
  if (offset + 2 > n) throw ContractViolation("split_two_block: block out of range");
  const Pencil& a = f.matrix();
  const std::size_t o = offset, terms = a.terms();
  auto col = [&](std::size_t l, std::size_t j) {
    return std::pair<Rational, Rational>{a[l](o, o + j), a[l](o + 1, o + j)};
  };

  // Candidate first columns q of the block transformation: (1, t), and (0, 1)
  // when column 1 of the system lies outside the block.
  std::vector<std::pair<Rational, Rational>> candidates;
  std::vector<std::array<Rational, 3>> quadratics;
  for (std::size_t l = 0; l < terms; ++l)
    for (std::size_t k = l + 1; k < terms; ++k) {
      auto [a0, a1] = col(l, 0);
      auto [b0, b1] = col(l, 1);
      auto [c0, c1] = col(k, 0);
      auto [d0, d1] = col(k, 1);
      // det[a + t b, c + t d]
      quadratics.push_back({det2(a0, c0, a1, c1), det2(a0, d0, a1, d1) + det2(b0, c0, b1, c1),
                            det2(b0, d0, b1, d1)});
    }
  auto nonzero = std::find_if(quadratics.begin(), quadratics.end(), [](const auto& q) {
    return q[0] != 0 || q[1] != 0 || q[2] != 0;
  });
  if (nonzero == quadratics.end()) {
    candidates.emplace_back(1, 0);
  } else {
    for (const Rational& t : quadratic_rational_roots((*nonzero)[0], (*nonzero)[1], (*nonzero)[2])) {
      bool all = true;
      for (const auto& q : quadratics)
        if (q[0] + q[1] * t + q[2] * t * t != 0) all = false;
      if (all) candidates.emplace_back(1, t);
    }
  }
  if (o != 0) candidates.emplace_back(0, 1);

  for (const auto& [q0, q1] : candidates) {
    // Columns A_l q must span at most a line; p annihilates it.
    RatMatrix span(2, terms);
    for (std::size_t l = 0; l < terms; ++l) {
      span(0, l) = a[l](o, o) * q0 + a[l](o, o + 1) * q1;
      span(1, l) = a[l](o + 1, o) * q0 + a[l](o + 1, o + 1) * q1;
    }
    if (rank(span) > 1) continue;
    auto left = nullspace(span.transpose());
    if (left.empty()) continue;
    const RatVector& p = left.front();
    Transformation t = Transformation::identity(n);
    // Second row p, first row a complement.
    if (p[0] != 0) {
      t.p(o, o) = 0;
      t.p(o, o + 1) = 1;
    }
    t.p(o + 1, o) = p[0];
    t.p(o + 1, o + 1) = p[1];
    t.q(o, o) = q0;
    t.q(o + 1, o) = q1;
    t.q(o, o + 1) = q0 == 0 ? 1 : 0;
    t.q(o + 1, o + 1) = q0 == 0 ? 0 : 1;
    t.shape = TransformShape::admissible;
    return t;
  }
  return std::nullopt;
}

RefineResult refine_pivots(const Als& f, Trace* trace) {
  Als g = f;
  bool progress = true;
  while (progress && !g.is_zero_system()) {
    progress = false;
    const PivotStructure ps = pivot_structure(g);
    for (std::size_t b = 0; b < ps.count() && !progress; ++b) {
      const std::size_t s = ps.sizes[b], o = ps.offset(b);
      if (s < 2) continue;
      std::optional<Transformation> t;
      if (auto split = split_block_linear(g, o, s)) t = split->applied;
      if (!t && s == 2) t = split_two_block(g, o);
      if (!t) continue;
      Als h = apply_transformation(g, *t);
      const PivotStructure finer = pivot_structure(h);
      if (finer.count() <= ps.count())
        throw InvariantFailure("refine_pivots: transformation did not split the block");
      g = std::move(h);
      if (trace) trace->add("REFINE block=" + std::to_string(b + 1) + " sizes=" + finer.str());
      progress = true;
    }
  }
  RefineResult out{g, RefineStatus::certified};
  for (auto s : pivot_structure(g).sizes)
    if (s > 2) out.status = RefineStatus::best_effort;
  return out;
}

}  // namespace freefrac
