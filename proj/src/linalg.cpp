#include "freefrac/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace freefrac {

Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  std::string_view body = text;
  if (!body.empty() && (body.front() == '-' || body.front() == '+'))
    body.remove_prefix(1);
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!digits(num) || (slash != std::string_view::npos && !digits(den)))
    throw UserError("malformed rational '" + std::string(text) + "'");
  mpz_class n(std::string(num), 10), d(1);
  if (slash != std::string_view::npos) d = mpz_class(std::string(den), 10);
  if (d == 0) throw UserError("zero denominator in '" + std::string(text) + "'");
  if (text.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw ContractViolation("RatMatrix: entry count does not match shape");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t r = rows.size(), c = r ? rows.front().size() : 0;
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw ContractViolation("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatVector RatMatrix::row(std::size_t i) const {
  return RatVector(entries_.begin() + i * cols_,
                   entries_.begin() + (i + 1) * cols_);
}

RatVector RatMatrix::col(std::size_t j) const {
  RatVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_)
    throw ContractViolation("block: out of range");
  RatMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
    throw ContractViolation("set_block: out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

RatMatrix RatMatrix::select(const std::vector<std::size_t>& rows,
                            const std::vector<std::size_t>& cols) const {
  RatMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ContractViolation("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw ContractViolation("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw ContractViolation("matrix product: shape mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatVector operator*(const RatMatrix& a, const RatVector& x) {
  if (a.cols_ != x.size()) throw ContractViolation("matrix-vector: shape mismatch");
  RatVector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j)
      if (a(i, j) != 0 && x[j] != 0) y[i] += a(i, j) * x[j];
  return y;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

RatVector row_times(const RatVector& x, const RatMatrix& a) {
  if (x.size() != a.rows()) throw ContractViolation("row_times: shape mismatch");
  RatVector y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0) y[j] += x[i] * a(i, j);
  }
  return y;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw ContractViolation("dot: length mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector e(n);
  e.at(i) = 1;
  return e;
}

bool is_zero(const RatVector& x) {
  for (const auto& e : x)
    if (e != 0) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns among the first
// `ncols` columns.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

LinSolveResult solve_linear(const RatMatrix& m, const RatVector& b) {
  if (b.size() != m.rows())
    throw ContractViolation("solve_linear: right-hand side length mismatch");
  const std::size_t n = m.cols();
  RatMatrix aug(m.rows(), n + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, n) = b[i];
  auto pivots = rref(aug, n + 1);

  LinSolveResult res;
  if (!pivots.empty() && pivots.back() == n) return res;
  res.feasible = true;
  res.particular.assign(n, Rational(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    res.particular[pivots[r]] = aug(r, n);
    is_pivot[pivots[r]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector z(n);
    z[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = -aug(r, f);
    res.nullspace.push_back(std::move(z));
  }
  return res;
}

std::vector<RatVector> nullspace(const RatMatrix& m) {
  return solve_linear(m, RatVector(m.rows())).nullspace;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix w = m;
  return rref(w, w.cols()).size();
}

std::optional<RatMatrix> invert(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ContractViolation("invert: non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, RatMatrix::identity(n));
  if (rref(aug, n).size() < n) return std::nullopt;
  return aug.block(0, n, n, n);
}

RatMatrix complete_basis(const std::vector<RatVector>& first,
                         const std::vector<RatVector>& last, std::size_t n,
                         const std::vector<RatVector>& candidates) {
  std::vector<RatVector> cols;
  auto independent_with = [&](const RatVector& x) {
    std::vector<RatVector> trial = cols;
    trial.insert(trial.end(), last.begin(), last.end());
    trial.push_back(x);
    RatMatrix t(n, trial.size());
    for (std::size_t j = 0; j < trial.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) t(i, j) = trial[j][i];
    return rank(t) == trial.size();
  };
  for (const auto& x : first) {
    if (x.size() != n) throw ContractViolation("complete_basis: length mismatch");
    cols.push_back(x);
  }
  std::vector<RatVector> pool = candidates;
  if (pool.empty())
    for (std::size_t i = 0; i < n; ++i) pool.push_back(unit_vector(n, i));
  for (const auto& x : pool) {
    if (cols.size() + last.size() >= n) break;
    if (independent_with(x)) cols.push_back(x);
  }
  cols.insert(cols.end(), last.begin(), last.end());
  if (cols.size() != n) throw InvariantFailure("complete_basis: pool too small");
  RatMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) out(i, j) = cols[j][i];
  if (rank(out) != n) throw InvariantFailure("complete_basis: dependent input");
  return out;
}

std::vector<Rational> quadratic_rational_roots(const Rational& c0, const Rational& c1,
                                               const Rational& c2) {
  if (c2 == 0) {
    if (c1 == 0) return {};
    return {-c0 / c1};
  }
  const Rational disc = c1 * c1 - 4 * c2 * c0;
  if (disc < 0) return {};
  if (!mpz_perfect_square_p(disc.get_num_mpz_t()) || !mpz_perfect_square_p(disc.get_den_mpz_t()))
    return {};
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), disc.get_num_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), disc.get_den_mpz_t());
  const Rational root(rn, rd);
  if (root == 0) return {-c1 / (2 * c2)};
  return {(-c1 + root) / (2 * c2), (-c1 - root) / (2 * c2)};
}

}  // namespace freefrac

namespace freefrac {

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw ContractViolation("determinant: non-square matrix");
  RatMatrix w = m;
  const std::size_t n = w.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && w(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(w(p, j), w(c, j));
      det = -det;
    }
    det *= w(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (w(i, c) == 0) continue;
      const Rational f = w(i, c) / w(c, c);
      for (std::size_t j = c; j < n; ++j) w(i, j) -= f * w(c, j);
    }
  }
  return det;
}

namespace {

constexpr unsigned long kMaxFactorable = 100000000000000UL;  // 1e14

std::optional<std::vector<mpz_class>> divisors(mpz_class x) {
  x = abs(x);
  if (x > kMaxFactorable) return std::nullopt;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= x; ++d) {
    if (x % d != 0) continue;
    out.push_back(d);
    if (d * d != x) out.push_back(x / d);
  }
  return out;
}

Rational horner(const std::vector<Rational>& c, const Rational& t) {
  Rational acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& c) {
  std::vector<Rational> p = c;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw ContractViolation("rational_roots: zero polynomial");
  std::vector<Rational> roots;
  std::size_t low = 0;
  while (p[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  p.erase(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(low));
  mpz_class lcm = 1;
  for (const auto& q : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  const Rational a0 = p.front() * lcm, an = p.back() * lcm;
  const auto num = divisors(a0.get_num()), den = divisors(an.get_num());
  if (!num || !den) return std::nullopt;
  for (const auto& a : *num)
    for (const auto& b : *den)
      for (int sign : {1, -1}) {
        Rational t(sign * a, b);
        t.canonicalize();
        if (horner(p, t) == 0 && std::find(roots.begin(), roots.end(), t) == roots.end())
          roots.push_back(t);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

RatMatrix at(const RatMatrix& m0, const RatMatrix& m1, const Rational& t) { return m0 + m1 * t; }

RatMatrix augmented(const RatMatrix& m, const RatVector& r) {
  RatMatrix out(m.rows(), m.cols() + 1);
  out.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, m.cols()) = r[i];
  return out;
}

// Greedy row and column choice for a nonzero square minor of maximal size.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> nonzero_minor(const RatMatrix& m) {
  std::vector<std::size_t> all_rows(m.rows()), cols, rows;
  for (std::size_t i = 0; i < m.rows(); ++i) all_rows[i] = i;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    cols.push_back(j);
    if (rank(m.select(all_rows, cols)) < cols.size()) cols.pop_back();
  }
  for (std::size_t i = 0; i < m.rows() && rows.size() < cols.size(); ++i) {
    rows.push_back(i);
    if (rank(m.select(rows, cols)) < rows.size()) rows.pop_back();
  }
  return {rows, cols};
}

}  // namespace

AffineFamilySearch solve_affine_family(const RatMatrix& m0, const RatMatrix& m1,
                                       const RatVector& r0, const RatVector& r1) {
  AffineFamilySearch out;
  const auto r_at = [&](const Rational& t) {
    RatVector v(r0.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r0[i] + t * r1[i];
    return v;
  };
  const auto try_at = [&](const Rational& t) {
    const LinSolveResult s = solve_linear(at(m0, m1, t), r_at(t));
    if (s.feasible) out.solution = AffineFamilySolution{t, s.particular};
    return s.feasible;
  };
  // The rank of m(t) is generic off the roots of a polynomial of degree at
  // most cols, so cols + 1 samples reach it.
  const std::size_t samples = m0.cols() + 1;
  std::size_t generic = 0;
  Rational witness = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const Rational t(static_cast<long>(k));
    if (try_at(t)) return out;
    const std::size_t rk = rank(at(m0, m1, t));
    if (rk >= generic) {
      generic = rk;
      witness = t;
    }
  }
  // Consistency at t needs every (generic + 1)-minor of [m | r] to vanish;
  // one that is nonzero at the witness has finitely many rational roots.
  const auto [rows, cols] = nonzero_minor(augmented(at(m0, m1, witness), r_at(witness)));
  if (rows.size() != generic + 1) throw InvariantFailure("solve_affine_family: rank bookkeeping");
  const std::size_t deg = rows.size();
  RatMatrix vander(deg + 1, deg + 1);
  RatVector values(deg + 1);
  for (std::size_t k = 0; k <= deg; ++k) {
    const Rational t(static_cast<long>(k));
    Rational pw = 1;
    for (std::size_t e = 0; e <= deg; ++e, pw *= t) vander(k, e) = pw;
    values[k] = determinant(augmented(at(m0, m1, t), r_at(t)).select(rows, cols));
  }
  const LinSolveResult poly = solve_linear(vander, values);
  const auto roots = rational_roots(poly.particular);
  if (!roots) {
    out.complete = false;
    return out;
  }
  for (const auto& t : *roots)
    if (try_at(t)) return out;
  return out;
}

}  // namespace freefrac
