#pragma once

#include <optional>
#include <string>
#include <utility>

#include "freefrac/minimize.hpp"

namespace freefrac {

enum class Verdict { equal_certified, unequal_certified, equal_probabilistic, unequal_witnessed };

std::string verdict_str(Verdict v);

struct EqualityVerdict {
  Verdict result = Verdict::equal_probabilistic;
  // (T, U) solving the linearized word problem for equal_certified.
  std::optional<std::pair<RatMatrix, RatMatrix>> transformation;
  // A point with differing evaluations for unequal_witnessed.
  std::optional<MatrixPoint> point;

  bool equal() const {
    return result == Verdict::equal_certified || result == Verdict::equal_probabilistic;
  }
};

struct OracleOptions {
  std::size_t trials = 10;
  std::size_t m = 0;  // 0: max of the two dimensions
  std::uint64_t seed = 1;
};

// T A_g - A_f U = A_f e_1 e_1^T, T v_g = v_f, first row of U zero; both
// systems minimal of the same dimension.
std::optional<std::pair<RatMatrix, RatMatrix>> word_problem_witness(const Als& f, const Als& g);

EqualityVerdict equal(const Als& f, const Als& g, OracleOptions oracle = {});
// Throws UserError when too few sampled points are regular for both inputs.
EqualityVerdict equal_probabilistic(const Als& f, const Als& g, OracleOptions oracle = {});

std::size_t rank(const Als& f);
bool is_zero(const Als& f);

}  // namespace freefrac
