#include "pla/subspace.hpp"

#include "pla/errors.hpp"

namespace pla {

Subspace Subspace::zero(Index ambient) {
  Subspace s;
  s.ambient = ambient;
  s.span = Mat(0, ambient);
  return s;
}

Subspace Subspace::full(Index ambient) {
  Subspace s;
  s.ambient = ambient;
  s.span = identity(ambient);
  return s;
}

Subspace Subspace::from_rows(Index ambient, const Mat& rows) {
  if (rows.cols() != ambient && rows.rows() != 0)
    throw PreconditionError("subspace rows do not match ambient dimension");
  Rref r = rref(rows.rows() ? rows : Mat(0, ambient));
  Subspace s;
  s.ambient = ambient;
  s.span = r.reduced.topRows(r.rank);
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient)
    throw PreconditionError("vector does not match ambient dimension");
  Vec w = v;
  for (Index i = 0; i < span.rows(); ++i) {
    Index piv = -1;
    for (Index j = 0; j < ambient; ++j)
      if (span(i, j) == 1) {
        piv = j;
        break;
      }
    if (piv >= 0 && sgn(w(piv)) != 0) {
      Rat coeff = w(piv);
      w -= coeff * span.row(i).transpose();
    }
  }
  for (Index j = 0; j < ambient; ++j)
    if (sgn(w(j)) != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient != ambient)
    throw PreconditionError("ambient dimension mismatch");
  for (Index i = 0; i < other.span.rows(); ++i)
    if (!contains(Vec(other.span.row(i).transpose()))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw PreconditionError("ambient dimension mismatch");
  Mat rows(a.span.rows() + b.span.rows(), a.ambient);
  rows.topRows(a.span.rows()) = a.span;
  rows.bottomRows(b.span.rows()) = b.span;
  return Subspace::from_rows(a.ambient, rows);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw PreconditionError("ambient dimension mismatch");
  // x in both row spaces: x = A^T u = B^T v, so (u, v) lies in the kernel
  // of [A^T | -B^T].
  const Index da = a.span.rows(), db = b.span.rows();
  if (da == 0 || db == 0) return Subspace::zero(a.ambient);
  Mat m(a.ambient, da + db);
  m.leftCols(da) = a.span.transpose();
  m.rightCols(db) = -b.span.transpose();
  auto null_basis = kernel(m);
  Mat rows(static_cast<Index>(null_basis.size()), a.ambient);
  for (std::size_t i = 0; i < null_basis.size(); ++i)
    rows.row(static_cast<Index>(i)) =
        (a.span.transpose() * null_basis[i].head(da)).transpose();
  return Subspace::from_rows(a.ambient, rows);
}

SubspacePairInfo subspace_ops(const Subspace& a, const Subspace& b) {
  SubspacePairInfo info;
  info.sum = sum(a, b);
  info.intersection = intersection(a, b);
  info.is_direct = info.intersection.dim() == 0;
  info.spans = info.sum.dim() == a.ambient;
  return info;
}

Subspace map_subspace(const LinearMap& f, const Subspace& s) {
  if (f.cols() != s.ambient)
    throw PreconditionError("map does not match ambient dimension");
  Mat rows = (f * s.span.transpose()).transpose();
  return Subspace::from_rows(f.rows(), rows);
}

}  // namespace pla
