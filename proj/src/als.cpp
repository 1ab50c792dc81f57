#include "freefrac/als.hpp"

#include <map>
#include <sstream>

namespace freefrac {

Pencil::Pencil(std::size_t n, std::size_t letters) : Pencil(n, n, letters) {}

Pencil::Pencil(std::size_t rows, std::size_t cols, std::size_t letters)
    : n_(rows), cols_(cols), coeffs_(letters + 1, RatMatrix(rows, cols)) {}

Pencil::Pencil(std::vector<RatMatrix> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ContractViolation("Pencil: no coefficient matrices");
  n_ = coeffs_[0].rows();
  cols_ = coeffs_[0].cols();
  for (const auto& c : coeffs_)
    if (c.rows() != n_ || c.cols() != cols_)
      throw ContractViolation("Pencil: coefficient shapes differ");
}

bool Pencil::entry_zero(std::size_t i, std::size_t j) const {
  for (const auto& c : coeffs_)
    if (c(i, j) != 0) return false;
  return true;
}

bool Pencil::entry_constant(std::size_t i, std::size_t j) const {
  for (std::size_t l = 1; l < coeffs_.size(); ++l)
    if (coeffs_[l](i, j) != 0) return false;
  return true;
}

bool Pencil::block_zero(std::size_t r0, std::size_t c0, std::size_t nr,
                        std::size_t nc) const {
  for (std::size_t i = r0; i < r0 + nr; ++i)
    for (std::size_t j = c0; j < c0 + nc; ++j)
      if (!entry_zero(i, j)) return false;
  return true;
}

NcPoly Pencil::entry(std::size_t i, std::size_t j) const {
  NcPoly p = NcPoly::constant(coeffs_[0](i, j));
  for (std::size_t l = 1; l < coeffs_.size(); ++l)
    p.add_term(Word{static_cast<Letter>(l - 1)}, coeffs_[l](i, j));
  return p;
}

void Pencil::set_entry(std::size_t i, std::size_t j, const NcPoly& affine) {
  if (affine.degree() > 1) throw ContractViolation("set_entry: entry not affine");
  for (auto& c : coeffs_) c(i, j) = 0;
  for (const auto& [w, c] : affine.terms()) {
    if (w.empty())
      coeffs_[0](i, j) = c;
    else
      coeffs_.at(w[0] + 1)(i, j) = c;
  }
}

Pencil Pencil::transformed(const RatMatrix& p, const RatMatrix& q) const {
  std::vector<RatMatrix> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(p * c * q);
  return Pencil(std::move(out));
}

Pencil Pencil::select(const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) const {
  Pencil s(rows.size(), cols.size(), letters());
  for (std::size_t l = 0; l < coeffs_.size(); ++l)
    s.coeffs_[l] = coeffs_[l].select(rows, cols);
  return s;
}

Pencil Pencil::block(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const {
  Pencil b(nr, nc, letters());
  for (std::size_t l = 0; l < coeffs_.size(); ++l)
    b.coeffs_[l] = coeffs_[l].block(r0, c0, nr, nc);
  return b;
}

void Pencil::set_block(std::size_t r0, std::size_t c0, const Pencil& b) {
  if (b.letters() != letters()) throw ContractViolation("set_block: alphabet mismatch");
  for (std::size_t l = 0; l < coeffs_.size(); ++l) coeffs_[l].set_block(r0, c0, b[l]);
}

RatMatrix Pencil::evaluate(const MatrixPoint& pt) const {
  if (pt.values.size() < letters())
    throw ContractViolation("evaluate: point does not cover the alphabet");
  const std::size_t m = pt.m;
  RatMatrix big(n_ * m, cols_ * m);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      if (coeffs_[0](i, j) != 0)
        for (std::size_t a = 0; a < m; ++a) big(i * m + a, j * m + a) = coeffs_[0](i, j);
      for (std::size_t l = 1; l < coeffs_.size(); ++l) {
        const Rational& c = coeffs_[l](i, j);
        if (c == 0) continue;
        const RatMatrix& x = pt.values[l - 1];
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b)
            if (x(a, b) != 0) big(i * m + a, j * m + b) += c * x(a, b);
      }
    }
  return big;
}

Als::Als(Pencil a, RatVector v) : a_(std::move(a)), v_(std::move(v)) {
  if (a_.rows() != a_.cols()) throw ContractViolation("Als: system matrix not square");
  if (v_.size() != a_.dim()) throw ContractViolation("Als: rhs length mismatch");
}

Als Als::zero(std::size_t letters) { return Als(Pencil(0, letters), {}); }

Als Als::scalar(const Rational& c, std::size_t letters) {
  if (c == 0) return zero(letters);
  Pencil a(1, letters);
  a.constant()(0, 0) = 1;
  return Als(std::move(a), {c});
}

RatVector Als::u() const {
  RatVector u(dim());
  if (!u.empty()) u[0] = 1;
  return u;
}

std::string Als::str(const Alphabet& alphabet) const {
  std::ostringstream os;
  const std::size_t n = dim();
  os << "n = " << n << '\n';
  if (n == 0) return os.str();
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::size_t width = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cells[i][j] = a_.entry(i, j).str(alphabet);
      if (cells[i][j] == "0") cells[i][j] = ".";
      width = std::max(width, cells[i][j].size());
    }
  std::vector<std::string> rhs(n);
  std::size_t rhs_width = 1;
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = v_[i] == 0 ? std::string(".") : to_string(v_[i]);
    rhs_width = std::max(rhs_width, rhs[i].size());
  }
  for (std::size_t i = 0; i < n; ++i) {
    os << "[ ";
    for (std::size_t j = 0; j < n; ++j)
      os << std::string(width - cells[i][j].size(), ' ') << cells[i][j] << ' ';
    os << "] [ " << std::string(rhs_width - rhs[i].size(), ' ') << rhs[i] << " ]\n";
  }
  return os.str();
}

Transformation Transformation::identity(std::size_t n) {
  return {RatMatrix::identity(n), RatMatrix::identity(n), TransformShape::admissible};
}

bool Transformation::admissible() const {
  if (q.rows() == 0) return true;
  for (std::size_t j = 0; j < q.cols(); ++j)
    if (q(0, j) != (j == 0 ? 1 : 0)) return false;
  return true;
}

std::string ElementType::str() const {
  return std::string("(") + (right ? "1" : "0") + "," + (left ? "1" : "0") + ")";
}

namespace {

void require_same_alphabet(const Als& f, const Als& g) {
  if (f.letters() != g.letters())
    throw ContractViolation("operands use different alphabets");
}

}  // namespace

Als als_monomial(const Word& w, std::size_t letters) {
  const std::size_t n = w.size() + 1;
  Pencil a(n, letters);
  for (std::size_t i = 0; i < n; ++i) a.constant()(i, i) = 1;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] >= letters) throw ContractViolation("als_monomial: letter out of range");
    a.letter(w[i])(i, i + 1) = -1;
  }
  return Als(std::move(a), unit_vector(n, n - 1));
}

Als als_scale(const Als& f, const Rational& mu) {
  if (mu == 0) throw ContractViolation("als_scale: zero factor");
  RatVector v = f.rhs();
  for (auto& e : v) e *= mu;
  return Als(f.matrix(), std::move(v));
}

Als als_add(const Als& f, const Als& g) {
  require_same_alphabet(f, g);
  if (f.is_zero_system()) return g;
  if (g.is_zero_system()) return f;
  const std::size_t nf = f.dim(), ng = g.dim(), n = nf + ng;
  Pencil a(n, f.letters());
  a.set_block(0, 0, f.matrix());
  a.set_block(nf, nf, g.matrix());
  // -A_f u_f^T u_g: minus the first column of A_f, placed in g's first column.
  for (std::size_t l = 0; l < a.terms(); ++l)
    for (std::size_t i = 0; i < nf; ++i) a[l](i, nf) = -f.matrix()[l](i, 0);
  RatVector v = f.rhs();
  v.insert(v.end(), g.rhs().begin(), g.rhs().end());
  return Als(std::move(a), std::move(v));
}

Als als_mul(const Als& f, const Als& g) {
  require_same_alphabet(f, g);
  if (f.is_zero_system()) return f;
  if (g.is_zero_system()) return g;
  const std::size_t nf = f.dim(), ng = g.dim(), n = nf + ng;
  Pencil a(n, f.letters());
  a.set_block(0, 0, f.matrix());
  a.set_block(nf, nf, g.matrix());
  for (std::size_t i = 0; i < nf; ++i) a.constant()(i, nf) = -f.rhs()[i];
  RatVector v(nf);
  v.insert(v.end(), g.rhs().begin(), g.rhs().end());
  return Als(std::move(a), std::move(v));
}

Als als_inv(const Als& f) {
  if (f.is_zero_system()) throw ContractViolation("als_inv: inverse of zero");
  const std::size_t n = f.dim();
  Pencil a(n + 1, f.letters());
  // Unknowns (f^{-1}, s): -v f^{-1} + A s = 0 and u s = 1.
  for (std::size_t i = 0; i < n; ++i) a.constant()(i, 0) = -f.rhs()[i];
  a.set_block(0, 1, f.matrix());
  a.constant()(n, 1) = 1;
  return Als(std::move(a), unit_vector(n + 1, n));
}

bool has_last_rhs_form(const Als& f) {
  const auto& v = f.rhs();
  if (v.empty() || v.back() == 0) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

bool has_first_column_e1(const Als& f) {
  const auto& a = f.matrix();
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (!a.entry_constant(i, 0)) return false;
    if (a.constant()(i, 0) != (i == 0 ? 1 : 0)) return false;
  }
  return f.dim() > 0;
}

bool has_last_row_en(const Als& f) {
  const auto& a = f.matrix();
  const std::size_t n = f.dim();
  for (std::size_t j = 0; j < n; ++j) {
    if (!a.entry_constant(n - 1, j)) return false;
    if (a.constant()(n - 1, j) != (j + 1 == n ? 1 : 0)) return false;
  }
  return n > 0;
}

bool is_polynomial_shape(const Als& f) {
  const auto& a = f.matrix();
  for (std::size_t i = 0; i < f.dim(); ++i) {
    if (!a.entry_constant(i, i) || a.constant()(i, i) != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (!a.entry_zero(i, j)) return false;
  }
  return f.dim() > 0;
}

Als als_mul_type1(const Als& f, const Als& g) {
  require_same_alphabet(f, g);
  if (!has_last_rhs_form(f))
    throw ContractViolation("als_mul_type1: left factor needs v = lambda e_n");
  if (!has_first_column_e1(g) || !has_last_rhs_form(g))
    throw ContractViolation("als_mul_type1: right factor needs first column e_1");
  const std::size_t nf = f.dim(), ng = g.dim();
  const Rational lf = f.rhs().back();
  if (ng == 1) return als_scale(f, g.rhs().back());
  const std::size_t n = nf + ng - 1;
  Pencil a(n, f.letters());
  a.set_block(0, 0, f.matrix());
  a.set_block(nf, nf, g.matrix().block(1, 1, ng - 1, ng - 1));
  for (std::size_t l = 0; l < a.terms(); ++l)
    for (std::size_t j = 1; j < ng; ++j)
      a[l](nf - 1, nf - 1 + j) = lf * g.matrix()[l](0, j);
  RatVector v(n);
  v[n - 1] = g.rhs().back();
  return Als(std::move(a), std::move(v));
}

Als apply_transformation(const Als& f, const Transformation& t) {
  if (t.p.rows() != f.dim() || t.q.rows() != f.dim())
    throw ContractViolation("apply_transformation: dimension mismatch");
  if (!t.admissible())
    throw ContractViolation("apply_transformation: first row of Q is not e_1");
  if (!invert(t.p) || !invert(t.q))
    throw ContractViolation("apply_transformation: singular transformation");
  return Als(f.matrix().transformed(t.p, t.q), t.p * f.rhs());
}

// Row operations bringing v to [0, ..., 0, lambda].
RatMatrix rhs_normalizer(const RatVector& v) {
  const std::size_t n = v.size();
  RatMatrix p = RatMatrix::identity(n);
  std::size_t last = n;
  for (std::size_t i = n; i-- > 0;)
    if (v[i] != 0) {
      last = i;
      break;
    }
  if (last == n) return p;
  if (last != n - 1) {
    p(last, last) = 0;
    p(n - 1, n - 1) = 0;
    p(last, n - 1) = 1;
    p(n - 1, last) = 1;
  }
  RatVector w = p * v;
  RatMatrix e = RatMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) e(i, n - 1) = -w[i] / w[n - 1];
  return e * p;
}


Als to_admissible(const LinearRepresentation& r) {
  const std::size_t n = r.a.dim();
  if (is_zero(r.u)) return Als::zero(r.a.letters());
  // N has u as first row; s' = N s turns u s into the first coordinate.
  std::vector<RatVector> pool;
  for (std::size_t j = 1; j < n; ++j) pool.push_back(unit_vector(n, j));
  pool.push_back(unit_vector(n, 0));
  RatMatrix nt = complete_basis({r.u}, {}, n, pool);
  auto q = invert(nt.transpose());
  if (!q) throw InvariantFailure("to_admissible: singular basis change");
  return Als(r.a.transformed(RatMatrix::identity(n), *q), r.v);
}

LinearRepresentation apply_transformation(const LinearRepresentation& r,
                                          const Transformation& t) {
  if (t.p.rows() != r.a.dim() || t.q.rows() != r.a.dim())
    throw ContractViolation("apply_transformation: dimension mismatch");
  if (!invert(t.p) || !invert(t.q))
    throw ContractViolation("apply_transformation: singular transformation");
  return {row_times(r.u, t.q), r.a.transformed(t.p, t.q), t.p * r.v};
}

TruncatedSeries als_expand(const Als& f, std::size_t bound) {
  TruncatedSeries out{NcPoly{}, bound};
  if (f.is_zero_system()) return out;
  auto a0inv = invert(f.matrix().constant());
  if (!a0inv) throw ContractViolation("als_expand: system is not regular");
  // A = A_0 (I - M) with M = -sum_l A_0^{-1} A_l x_l.
  std::vector<RatMatrix> m;
  for (std::size_t l = 0; l < f.letters(); ++l) m.push_back(-(*a0inv * f.matrix().letter(l)));
  std::map<Word, RatVector, ShortLex> layer{{Word{}, *a0inv * f.rhs()}};
  for (std::size_t k = 0;; ++k) {
    for (const auto& [w, vec] : layer) out.terms.add_term(w, vec[0]);
    if (k == bound) break;
    std::map<Word, RatVector, ShortLex> next;
    for (const auto& [w, vec] : layer)
      for (std::size_t l = 0; l < m.size(); ++l) {
        RatVector nv = m[l] * vec;
        if (is_zero(nv)) continue;
        Word nw{static_cast<Letter>(l)};
        nw.insert(nw.end(), w.begin(), w.end());
        next.emplace(std::move(nw), std::move(nv));
      }
    if (next.empty()) break;
    layer = std::move(next);
  }
  return out;
}

std::optional<RatMatrix> als_eval(const LinearRepresentation& r,
                                  const MatrixPoint& pt) {
  const std::size_t n = r.a.dim(), m = pt.m;
  if (n == 0) return RatMatrix(m, m);
  RatMatrix big = r.a.evaluate(pt);
  RatMatrix rhs(n * m, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < m; ++a) rhs(i * m + a, a) = r.v[i];
  auto inv = invert(big);
  if (!inv) return std::nullopt;
  RatMatrix sol = *inv * rhs;
  RatMatrix out(m, m);
  for (std::size_t i = 0; i < n; ++i) {
    if (r.u[i] == 0) continue;
    out += sol.block(i * m, 0, m, m) * r.u[i];
  }
  return out;
}

std::optional<RatMatrix> als_eval(const Als& f, const MatrixPoint& pt) {
  return als_eval(LinearRepresentation{f.u(), f.matrix(), f.rhs()}, pt);
}

Fullness is_full_probabilistic(const Pencil& a, std::size_t trials,
                               std::uint64_t seed) {
  const std::size_t n = a.dim();
  if (n == 0) return Fullness::full_witnessed;
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t t = 0; t < trials; ++t) {
      Rng rng = make_rng(seed, m * 1000003u + t);
      MatrixPoint pt = random_point(a.letters(), m, rng);
      if (rank(a.evaluate(pt)) == n * m) return Fullness::full_witnessed;
    }
  return Fullness::likely_non_full;
}

}  // namespace freefrac
