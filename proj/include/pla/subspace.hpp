#pragma once

#include <string>

#include "pla/linalg.hpp"

namespace pla {

// Subspace of a fixed coordinate space, stored as a row-reduced spanning
// matrix. The canonical form makes equality of subspaces a plain matrix
// comparison.
struct Subspace {
  Index ambient = 0;
  Mat span;  // rows independent, reduced row echelon, no zero rows

  static Subspace zero(Index ambient);
  static Subspace full(Index ambient);
  static Subspace from_rows(Index ambient, const Mat& rows);

  Index dim() const { return span.rows(); }
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient == b.ambient && exact_eq(a.span, b.span);
  }
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

struct SubspacePairInfo {
  Subspace sum;
  Subspace intersection;
  bool is_direct = false;  // intersection is zero
  bool spans = false;      // sum has full ambient dimension
};

SubspacePairInfo subspace_ops(const Subspace& a, const Subspace& b);

// Image of a subspace under a linear map (columns = images of basis).
Subspace map_subspace(const LinearMap& f, const Subspace& s);

}  // namespace pla
