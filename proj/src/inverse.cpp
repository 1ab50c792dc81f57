// Element types, canonical shapes and the minimal inverse.
#include "freefrac/als.hpp"

namespace freefrac {

std::optional<RatVector> right_family_witness(const Als& f) {
  const std::size_t n = f.dim(), d = f.letters();
  if (n == 0) return std::nullopt;
  RatMatrix m(n * d + 1, n);
  RatVector b(n * d + 1);
  for (std::size_t l = 0; l < d; ++l) m.set_block(l * n, 0, f.matrix().letter(l));
  m(n * d, 0) = 1;
  b[n * d] = 1;
  auto sol = solve_linear(m, b);
  if (!sol.feasible) return std::nullopt;
  return sol.particular;
}

std::optional<RatVector> left_family_witness(const Als& f) {
  const std::size_t n = f.dim(), d = f.letters();
  if (n == 0) return std::nullopt;
  RatMatrix m(n * d + 1, n);
  RatVector b(n * d + 1);
  for (std::size_t l = 0; l < d; ++l)
    m.set_block(l * n, 0, f.matrix().letter(l).transpose());
  for (std::size_t j = 0; j < n; ++j) m(n * d, j) = f.rhs()[j];
  b[n * d] = 1;
  auto sol = solve_linear(m, b);
  if (!sol.feasible) return std::nullopt;
  return sol.particular;
}

ElementType detect_type(const Als& f) {
  return {right_family_witness(f).has_value(), left_family_witness(f).has_value()};
}

namespace {

RatMatrix inverse_of(const RatMatrix& m) {
  auto inv = invert(m);
  if (!inv) throw InvariantFailure("canonical transformation is singular");
  return *inv;
}

}  // namespace

Transformation canonical_transformation(const Als& f, ElementType t) {
  const std::size_t n = f.dim();
  if (n < 2) throw ContractViolation("canonical_transformation: needs dimension >= 2");
  const RatVector& v = f.rhs();
  std::optional<RatVector> q, p;
  if (t.right && !(q = right_family_witness(f)))
    throw InvariantFailure("type claims 1 in the right family, no witness");
  if (t.left && !(p = left_family_witness(f)))
    throw InvariantFailure("type claims 1 in the left family, no witness");

  Transformation tr = Transformation::identity(n);
  if (!t.right && !t.left) {
    tr.p = rhs_normalizer(v);
    return tr;
  }
  const RatVector e1 = unit_vector(n, 0);
  std::optional<RatVector> c, r;
  if (q) c = f.matrix().constant() * *q;
  if (p) r = row_times(*p, f.matrix().constant());

  // Columns: P^{-1} has c first (P c = e_1) and v last (P v = e_n).
  std::vector<RatVector> kernel_pool;
  if (p) {
    RatMatrix prow(1, n, *p);
    kernel_pool = nullspace(prow);
  }
  std::vector<RatVector> first_cols;
  if (c) first_cols.push_back(*c);
  tr.p = inverse_of(complete_basis(first_cols, {v}, n, kernel_pool));

  // Q^{-1} has e_1 as first row (admissible), r as last row (r Q = e_n^T) and
  // annihilates q in the middle rows (Q e_1 = q).
  if (q && !r) {
    RatMatrix qm = RatMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) qm(i, 0) = (*q)[i];
    tr.q = qm;
  } else {
    std::vector<RatVector> pool;
    if (q)
      for (std::size_t j = 1; j < n; ++j) {
        RatVector w = unit_vector(n, j);
        w[0] = -(*q)[j];
        pool.push_back(std::move(w));
      }
    tr.q = inverse_of(complete_basis({e1}, {*r}, n, pool).transpose());
  }
  return tr;
}

std::optional<Als> try_canonicalize_for_inverse(const Als& f, ElementType t) {
  Als g = apply_transformation(f, canonical_transformation(f, t));
  if (!has_last_rhs_form(g) || (t.right && !has_first_column_e1(g)) ||
      (t.left && !has_last_row_en(g)))
    return std::nullopt;
  return g;
}

Als canonicalize_for_inverse(const Als& f, ElementType t) {
  auto g = try_canonicalize_for_inverse(f, t);
  if (!g) throw InvariantFailure("canonicalization did not reach the case shape");
  return *g;
}

std::size_t minimal_inverse_dim(std::size_t n, ElementType t) {
  if (t.right && t.left) return n - 1;
  if (!t.right && !t.left) return n + 1;
  return n;
}

Als minimal_inverse(const Als& f, ElementType t) {
  const std::size_t n = f.dim();
  if (n < 2) throw ContractViolation("minimal_inverse: scalar input");
  if (!has_last_rhs_form(f) || (t.right && !has_first_column_e1(f)) ||
      (t.left && !has_last_row_en(f)))
    throw ContractViolation("minimal_inverse: input not in canonical case shape");
  const Pencil& a = f.matrix();
  const std::size_t d = f.letters();
  const Rational lambda = f.rhs().back();
  const std::size_t m = n - 2;  // size of the middle block B
  auto rev = [m](std::size_t i) { return m - 1 - i; };

  Pencil out(minimal_inverse_dim(n, t), d);
  const std::size_t nn = out.dim();
  for (std::size_t l = 0; l <= d; ++l) {
    const RatMatrix& s = a[l];
    RatMatrix& o = out[l];
    if (t.right && t.left) {
      // [[-lambda S b'', -S B S], [-lambda b, -b' S]]
      for (std::size_t i = 0; i < m; ++i) {
        o(i, 0) = -lambda * s(1 + rev(i), n - 1);
        for (std::size_t j = 0; j < m; ++j) o(i, 1 + j) = -s(1 + rev(i), 1 + rev(j));
      }
      o(m, 0) = -lambda * s(0, n - 1);
      for (std::size_t j = 0; j < m; ++j) o(m, 1 + j) = -s(0, 1 + rev(j));
    } else if (t.right) {
      // [[1, -c/lambda, -c' S/lambda], [0, -S b'', -S B S], [0, -b, -b' S]]
      if (l == 0) o(0, 0) = 1;
      o(0, 1) = -s(n - 1, n - 1) / lambda;
      for (std::size_t j = 0; j < m; ++j) o(0, 2 + j) = -s(n - 1, 1 + rev(j)) / lambda;
      for (std::size_t i = 0; i < m; ++i) {
        o(1 + i, 1) = -s(1 + rev(i), n - 1);
        for (std::size_t j = 0; j < m; ++j) o(1 + i, 2 + j) = -s(1 + rev(i), 1 + rev(j));
      }
      o(n - 1, 1) = -s(0, n - 1);
      for (std::size_t j = 0; j < m; ++j) o(n - 1, 2 + j) = -s(0, 1 + rev(j));
    } else if (t.left) {
      // [[-lambda S b'', -S B S, -S a'], [-lambda b, -b' S, -a], [0, 0, 1]]
      for (std::size_t i = 0; i < m; ++i) {
        o(i, 0) = -lambda * s(1 + rev(i), n - 1);
        for (std::size_t j = 0; j < m; ++j) o(i, 1 + j) = -s(1 + rev(i), 1 + rev(j));
        o(i, n - 1) = -s(1 + rev(i), 0);
      }
      o(m, 0) = -lambda * s(0, n - 1);
      for (std::size_t j = 0; j < m; ++j) o(m, 1 + j) = -s(0, 1 + rev(j));
      o(m, n - 1) = -s(0, 0);
      if (l == 0) o(n - 1, n - 1) = 1;
    } else {
      // [[S v, -S A S], [0, u S]] with the original (general) v.
      for (std::size_t i = 0; i < n; ++i) {
        if (l == 0) o(i, 0) = f.rhs()[n - 1 - i];
        for (std::size_t j = 0; j < n; ++j) o(i, 1 + j) = -s(n - 1 - i, n - 1 - j);
      }
      if (l == 0) o(n, n) = 1;
    }
  }
  return Als(std::move(out), unit_vector(nn, nn - 1));
}

}  // namespace freefrac
