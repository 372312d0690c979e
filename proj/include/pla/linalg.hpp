#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "pla/rational.hpp"

namespace pla {

using Mat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using Vec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

// Column j of a LinearMap is the image of basis vector j.
using LinearMap = Mat;

inline Mat zeros(Index rows, Index cols) { return Mat::Zero(rows, cols); }
inline Vec zero_vec(Index n) { return Vec::Zero(n); }
inline Mat identity(Index n) { return Mat::Identity(n, n); }

inline bool exact_eq(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool is_zero(const Mat& a) {
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0) return false;
  return true;
}

struct Rref {
  Mat reduced;
  Index rank = 0;
  std::vector<Index> pivot_cols;
};

// Reduced row echelon form by exact Gaussian elimination. Idempotent:
// rref(rref(m)).reduced == rref(m).reduced.
Rref rref(const Mat& m);

// Exact basis of the null space; size cols - rank, every vector
// annihilated by m.
std::vector<Vec> kernel(const Mat& m);

struct AffineSolution {
  Vec particular;
  std::vector<Vec> homogeneous;  // kernel basis
};

// All solutions of m x = b as particular + span(homogeneous), or
// nothing when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Mat& m, const Vec& b);

// Exact determinant (square input required).
Rat det(const Mat& m);

// True iff m^n = 0 for n = size.
bool is_nilpotent_matrix(const Mat& m);

// Finite exponential sum_{k} m^k / k! of a nilpotent matrix.
// Throws PreconditionError when m is not nilpotent.
Mat nilpotent_exp(const Mat& m);

// Coordinates of v in the row space of a row-reduced span matrix, if any.
std::optional<Vec> coordinates_in_rows(const Mat& span_rows, const Vec& v);

}  // namespace pla
