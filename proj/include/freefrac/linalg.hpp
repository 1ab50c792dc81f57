#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "freefrac/rational.hpp"

namespace freefrac {

using RatVector = std::vector<Rational>;

// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RatMatrix identity(std::size_t n);
  // Nested initializer, mainly for tests: {{1, 2}, {3, 4}}.
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  const std::vector<Rational>& entries() const { return entries_; }

  RatVector row(std::size_t i) const;
  RatVector col(std::size_t j) const;

  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                  std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);
  // Keeps the listed rows and columns, in the given order.
  RatMatrix select(const std::vector<std::size_t>& rows,
                   const std::vector<std::size_t>& cols) const;

  RatMatrix transpose() const;
  bool is_zero() const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rational& s) { return a *= s; }
  friend RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
  friend RatMatrix operator-(RatMatrix a) { return a *= Rational(-1); }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatVector operator*(const RatMatrix& a, const RatVector& x);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

RatVector row_times(const RatVector& x, const RatMatrix& a);
Rational dot(const RatVector& a, const RatVector& b);
RatVector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const RatVector& x);

struct LinSolveResult {
  bool feasible = false;
  RatVector particular;
  std::vector<RatVector> nullspace;
};

// Exact Gaussian elimination. The pivot in each column is the first remaining
// row with a nonzero entry; free variables are zero in the particular solution
// and the nullspace basis is ordered by free column.
LinSolveResult solve_linear(const RatMatrix& m, const RatVector& b);

std::vector<RatVector> nullspace(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

// std::nullopt when singular.
std::optional<RatMatrix> invert(const RatMatrix& m);

// Rational roots of c0 + c1 t + c2 t^2, which must not vanish identically.
std::vector<Rational> quadratic_rational_roots(const Rational& c0, const Rational& c1,
                                               const Rational& c2);

Rational determinant(const RatMatrix& m);

// Rational roots of c[0] + c[1] t + ... (not identically zero), ascending.
// Empty optional when a coefficient is too large to enumerate divisors.
std::optional<std::vector<Rational>> rational_roots(const std::vector<Rational>& c);

// Search for a rational t making (m0 + t m1) y = r0 + t r1 consistent.
struct AffineFamilySolution {
  Rational t;
  RatVector y;
};
struct AffineFamilySearch {
  std::optional<AffineFamilySolution> solution;
  bool complete = true;  // false: some candidate values could not be enumerated
};
AffineFamilySearch solve_affine_family(const RatMatrix& m0, const RatMatrix& m1,
                                       const RatVector& r0, const RatVector& r1);

// Columns `first`, then vectors drawn greedily from `candidates` (standard
// basis in index order when empty) while they stay independent, then `last`.
// The result is an invertible n x n matrix; throws InvariantFailure if the
// pool cannot complete a basis.
RatMatrix complete_basis(const std::vector<RatVector>& first,
                         const std::vector<RatVector>& last, std::size_t n,
                         const std::vector<RatVector>& candidates = {});

}  // namespace freefrac
