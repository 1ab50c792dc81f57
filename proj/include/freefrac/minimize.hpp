#pragma once

#include <optional>
#include <string>
#include <vector>

#include "freefrac/als.hpp"

namespace freefrac {

// One line per step: "L k=3 dim 6->5 T=[0,0,1] U=[0,0,-1]", "R k=2 ...",
// "REFINE block=2 sizes=[1,1,2]".
struct Trace {
  std::vector<std::string> lines;
  void add(std::string line) { lines.push_back(std::move(line)); }
  std::string str() const;
};

struct PivotStructure {
  std::vector<std::size_t> sizes;
  std::size_t count() const { return sizes.size(); }
  // Index of the first row of block k (0-based block index).
  std::size_t offset(std::size_t k) const;
  std::string str() const;
};

// Finest decomposition into diagonal blocks with zeros below the block
// diagonal in every coefficient matrix.
PivotStructure pivot_structure(const Als& f);

struct MinStep {
  Als reduced;
  RatMatrix t;
  RatMatrix u;
  Transformation applied;
};

// Block indices are 1-based as in the algorithm statements. With
// `pin_first_column` and k = 1 the block U is forced to zero, so success means
// the system represents zero.
std::optional<MinStep> left_min_step(const Als& f, std::size_t k,
                                     bool pin_first_column = true);
std::optional<MinStep> right_min_step(const Als& f, std::size_t k);
// Eliminates block 1 through the extended system 1 * f. Returns the empty
// system when f = 0.
std::optional<Als> extended_left_step(const Als& f);

// Row operations only; v becomes [0, ..., 0, lambda].
Als standardize(const Als& f);

Als minimize_polynomial(const Als& f, Trace* trace = nullptr);

struct GeneralOptions {
  // Decrement k after a block-1 elimination (published correction).
  bool decrement_after_first_block = true;
};
Als minimize_general(const Als& f, Trace* trace = nullptr,
                     GeneralOptions options = {});

enum class RefineStatus { certified, best_effort };

struct RefineResult {
  Als als;
  RefineStatus status = RefineStatus::best_effort;
};

// Splits pivot blocks by permutations, linear ansatz transformations and, for
// 2 x 2 blocks, an exact rational search. Never changes the element.
RefineResult refine_pivots(const Als& f, Trace* trace = nullptr);

struct BlockSplit {
  std::vector<std::size_t> rows;  // moved to the bottom of the block
  std::vector<std::size_t> cols;  // moved to its front
  Transformation ansatz;          // P = I + alpha, Q = I + beta, before permuting
  Transformation applied;
};

// Permutations, then the linear ansatz whose row and column operations do
// not overlap; the split block is rows x cols, zero after `ansatz`.
std::optional<BlockSplit> split_block_linear(const Als& f, std::size_t offset,
                                             std::size_t size);

// Whether a 2 x 2 diagonal block starting at `offset` can be split by an
// admissible block transformation over the rationals.
std::optional<Transformation> split_two_block(const Als& f, std::size_t offset);

// Exact minimality test: after a scalar shift x -> x + a that makes the
// constant coefficient invertible, the left and right families are
// independent iff the reachable and observable Krylov spaces are full.
// std::nullopt when no regular shift was found.
std::optional<bool> is_minimal_exact(const Als& f);

// Reachability/observability reduction of the shifted series; returns a
// minimal ALS or std::nullopt when no regular shift was found.
std::optional<Als> reduce_by_series(const Als& f);

struct Minimized {
  Als als;
  bool certified = false;  // minimality proven exactly
  RefineStatus refinement = RefineStatus::best_effort;
};

// Full pipeline: polynomial algorithm when the shape permits, otherwise
// refinement and the general algorithm; certified by is_minimal_exact with
// the series reduction as fallback.
Minimized minimize(const Als& f, Trace* trace = nullptr);

// Minimal polynomial ALS of p.
Als als_from_poly(const NcPoly& p, std::size_t letters);

}  // namespace freefrac
