#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "freefrac/linalg.hpp"
#include "freefrac/ncpoly.hpp"

namespace freefrac {

// A = A_0 + sum_l A_l x_l; coeffs[0] is the constant part, coeffs[1 + l]
// the coefficient of letter l.
class Pencil {
 public:
  Pencil() = default;
  Pencil(std::size_t n, std::size_t letters);
  Pencil(std::size_t rows, std::size_t cols, std::size_t letters);
  explicit Pencil(std::vector<RatMatrix> coeffs);

  std::size_t dim() const { return n_; }
  std::size_t rows() const { return n_; }
  std::size_t cols() const { return cols_; }
  std::size_t letters() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  std::size_t terms() const { return coeffs_.size(); }

  RatMatrix& operator[](std::size_t l) { return coeffs_.at(l); }
  const RatMatrix& operator[](std::size_t l) const { return coeffs_.at(l); }
  RatMatrix& constant() { return coeffs_.at(0); }
  const RatMatrix& constant() const { return coeffs_.at(0); }
  RatMatrix& letter(std::size_t l) { return coeffs_.at(l + 1); }
  const RatMatrix& letter(std::size_t l) const { return coeffs_.at(l + 1); }

  // Entry (i, j) vanishes in every coefficient matrix.
  bool entry_zero(std::size_t i, std::size_t j) const;
  bool entry_constant(std::size_t i, std::size_t j) const;
  bool block_zero(std::size_t r0, std::size_t c0, std::size_t nr,
                  std::size_t nc) const;
  // The affine entry as a polynomial of degree <= 1.
  NcPoly entry(std::size_t i, std::size_t j) const;
  void set_entry(std::size_t i, std::size_t j, const NcPoly& affine);

  Pencil transformed(const RatMatrix& p, const RatMatrix& q) const;
  Pencil select(const std::vector<std::size_t>& rows,
                const std::vector<std::size_t>& cols) const;
  Pencil block(std::size_t r0, std::size_t c0, std::size_t nr,
               std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Pencil& b);

  // sum_l A_l (x) X_l with A_0 (x) I, an (n m) x (n m) matrix.
  RatMatrix evaluate(const MatrixPoint& pt) const;

  friend bool operator==(const Pencil&, const Pencil&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t cols_ = 0;
  std::vector<RatMatrix> coeffs_;
};

// Admissible linear system (e_1, A, v). Dimension 0 is the zero element.
class Als {
 public:
  Als() = default;
  Als(Pencil a, RatVector v);

  static Als zero(std::size_t letters);
  static Als scalar(const Rational& c, std::size_t letters);

  std::size_t dim() const { return a_.dim(); }
  std::size_t letters() const { return a_.letters(); }
  bool is_zero_system() const { return dim() == 0; }
  const Pencil& matrix() const { return a_; }
  const RatVector& rhs() const { return v_; }
  RatVector u() const;

  std::string str(const Alphabet& alphabet) const;
  friend bool operator==(const Als&, const Als&) = default;

 private:
  Pencil a_;
  RatVector v_;
};

// (u, A, v) with arbitrary u; f = u A^{-1} v.
struct LinearRepresentation {
  RatVector u;
  Pencil a;
  RatVector v;
};

enum class TransformShape {
  general,
  admissible,
  block,
  polynomial,
  factorization,
  polynomial_factorization
};

struct Transformation {
  RatMatrix p;
  RatMatrix q;
  TransformShape shape = TransformShape::admissible;

  static Transformation identity(std::size_t n);
  // First row of Q equals e_1.
  bool admissible() const;
};

// Membership of 1 in the span of the right family t = u A^{-1} (first slot)
// and of the left family s = A^{-1} v (second slot).
struct ElementType {
  bool right = false;
  bool left = false;
  std::string str() const;
  friend bool operator==(const ElementType&, const ElementType&) = default;
};

struct TruncatedSeries {
  NcPoly terms;
  std::size_t bound = 0;
};

enum class Fullness { full_witnessed, likely_non_full };

Als als_monomial(const Word& w, std::size_t letters);
Als als_scale(const Als& f, const Rational& mu);
Als als_add(const Als& f, const Als& g);
Als als_mul(const Als& f, const Als& g);
Als als_inv(const Als& f);
// f with v = lambda e_n times g whose first column is e_1 and v = mu e_n.
Als als_mul_type1(const Als& f, const Als& g);

bool has_last_rhs_form(const Als& f);
bool has_first_column_e1(const Als& f);
bool has_last_row_en(const Als& f);
// Upper triangular with unit constant diagonal.
bool is_polynomial_shape(const Als& f);

// Solutions of {A_l q = 0 for all letters, q_1 = 1} and {p A_l = 0, p v = 1}.
std::optional<RatVector> right_family_witness(const Als& f);
std::optional<RatVector> left_family_witness(const Als& f);
ElementType detect_type(const Als& f);

Transformation canonical_transformation(const Als& f, ElementType t);
Als canonicalize_for_inverse(const Als& f, ElementType t);
// Empty when both bits are set but the two normalizations cannot be met at
// once (1 + x^-1 is an example).
std::optional<Als> try_canonicalize_for_inverse(const Als& f, ElementType t);
// Requires the case shape produced by canonicalize_for_inverse.
Als minimal_inverse(const Als& f, ElementType t);
std::size_t minimal_inverse_dim(std::size_t n, ElementType t);

Als apply_transformation(const Als& f, const Transformation& t);
// Column change of basis turning u into e_1; the empty system when u = 0.
Als to_admissible(const LinearRepresentation& r);
// Row operations P (upper unitriangular when v_n != 0) with P v = lambda e_n.
RatMatrix rhs_normalizer(const RatVector& v);
LinearRepresentation apply_transformation(const LinearRepresentation& r,
                                          const Transformation& t);

// Power series expansion up to degree `bound`; throws ContractViolation when
// the constant coefficient matrix is singular.
TruncatedSeries als_expand(const Als& f, std::size_t bound);

std::optional<RatMatrix> als_eval(const Als& f, const MatrixPoint& pt);
std::optional<RatMatrix> als_eval(const LinearRepresentation& r,
                                  const MatrixPoint& pt);

Fullness is_full_probabilistic(const Pencil& a, std::size_t trials,
                               std::uint64_t seed = 1);

}  // namespace freefrac
