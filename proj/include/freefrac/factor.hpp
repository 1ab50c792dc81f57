#pragma once

#include <optional>
#include <vector>

#include "freefrac/wordproblem.hpp"

namespace freefrac {

// Minimal ALS of p * q for minimal polynomial systems of dimension >= 2;
// the result has dimension n_p + n_q - 1.
Als poly_mul_minimal(const Als& p, const Als& q);

// The polynomial represented by a polynomial ALS.
NcPoly poly_of(const Als& p);

struct Split {
  Als left;
  Als right;
  Transformation applied;
};

struct SplitSearch {
  std::optional<Split> split;
  // No split exists over the rationals (the search is complete for rank 3).
  bool exhaustive = false;
};

// Looks for a polynomial factorization transformation creating the upper
// right zero block for a left factor of rank n1.
SplitSearch factor_split(const Als& p, std::size_t n1);

struct Factorization {
  std::vector<Als> factors;
  bool certified = false;
};

Factorization factorize_atoms(const Als& p);

bool verify_factorization(const Als& p, const Factorization& f);

}  // namespace freefrac
