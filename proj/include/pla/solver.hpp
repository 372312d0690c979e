#pragma once

#include <optional>
#include <vector>

#include "pla/post_lie.hpp"

namespace pla {

// Positions allowed to be nonzero; for product searches a pair (l, r)
// frees the whole vector e_l . e_r, for operator searches it frees the
// matrix entry at (row, col). Everything else is pinned to zero.
struct SupportMask {
  std::vector<std::pair<Index, Index>> allowed;
};

struct Ansatz {
  long bound = 1;
  std::vector<long> denominators{1, 2};
  std::size_t max_solutions = 4096;
  std::size_t param_cap = 24;
  std::optional<SupportMask> support;
  unsigned threads = 1;

  // Sorted grid values {a/d : |a| <= bound*d, d in denominators}.
  std::vector<Rat> grid_values() const;
};

// Exact solutions of the affine axioms (1) and (3): every point
// particular + basis * t satisfies them.
struct AffineSolutionSpace {
  Index flat_dim = 0;  // dim^3 product coordinates
  Vec particular;
  Mat basis;  // one column per free parameter

  Index dim() const { return basis.cols(); }
  Vec point(const Vec& t) const { return particular + basis * t; }
};

// Empty result is a genuine proof that no post-Lie structure exists on
// the pair; grid emptiness never is.
std::optional<AffineSolutionSpace> linear_stage(
    const LiePair& pair, const std::optional<SupportMask>& support = {});

struct Solution {
  Vec t;  // grid coordinates
  BilinearProduct prod;
  AxiomReport report;
  bool induced_jacobi_ok = false;
  Fingerprint induced_fingerprint;
};

struct SolutionSet {
  std::vector<Solution> solutions;  // lexicographic in t
  bool exhausted = false;           // full grid covered
};

SolutionSet grid_search(const LiePair& pair, const AffineSolutionSpace& space,
                        const Ansatz& ansatz);

struct RBSolution {
  Vec t;
  LinearMap op;
  bool induced_jacobi_ok = false;
  bool postlie_ok = false;  // inner product vs induced g, when Jacobi holds
  Fingerprint induced_fingerprint;
};

struct RBSolutionSet {
  std::vector<RBSolution> solutions;
  bool exhausted = false;
};

// Weight-1 Rota-Baxter operators over the grid (n^2 unknowns unless a
// support mask restricts them).
RBSolutionSet search_rb(const LieAlgebra& n, const Ansatz& ansatz);

enum class NonexistenceKind {
  ProvenEmpty,   // the linear stage is inconsistent: a proof
  GridEmpty,     // nothing on the grid: evidence only, not a proof
  WitnessFound,  // a post-Lie structure exists
};

struct NonexistenceReport {
  NonexistenceKind kind = NonexistenceKind::GridEmpty;
  Index free_parameters = 0;  // 0 when proven empty
  bool grid_exhausted = false;
  std::optional<Solution> witness;
};

NonexistenceReport nonexistence_report(const LiePair& pair, const Ansatz& ansatz);

}  // namespace pla
