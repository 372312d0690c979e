#include "pla/structure.hpp"

#include <sstream>

#include "pla/errors.hpp"

namespace pla {

namespace {

Vec flatten(const Mat& m) {
  Vec v(m.rows() * m.cols());
  Index k = 0;
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r) v(k++) = m(r, c);
  return v;
}

// Subtract row-space components of a row-reduced matrix from v.
Vec reduce_mod_rows(const Mat& rr, const std::vector<Index>& pivots, Vec v) {
  for (Index i = 0; i < rr.rows(); ++i) {
    Rat c = v(pivots[static_cast<std::size_t>(i)]);
    if (sgn(c) != 0) v -= c * rr.row(i).transpose();
  }
  return v;
}

// Span of flattened matrices, kept in reduced form for membership tests.
struct MatSpan {
  Index flat_dim;
  Mat rows{0, 0};
  std::vector<Index> pivots;

  explicit MatSpan(Index flat) : flat_dim(flat), rows(0, flat) {}

  bool add(const Mat& m) {
    Vec v = reduce_mod_rows(rows, pivots, flatten(m));
    Index piv = -1;
    for (Index j = 0; j < flat_dim; ++j)
      if (sgn(v(j)) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    v /= v(piv);
    // Keep existing rows reduced against the new one.
    for (Index i = 0; i < rows.rows(); ++i) {
      const Rat c = rows(i, piv);
      if (sgn(c) != 0) rows.row(i) -= c * v.transpose();
    }
    rows.conservativeResize(rows.rows() + 1, flat_dim);
    rows.row(rows.rows() - 1) = v.transpose();
    pivots.push_back(piv);
    return true;
  }

  bool contains(const Mat& m) const {
    Vec v = reduce_mod_rows(rows, pivots, flatten(m));
    for (Index j = 0; j < flat_dim; ++j)
      if (sgn(v(j)) != 0) return false;
    return true;
  }
};

// Nilradical of a solvable Lie algebra r: the set of x with ad_r(x)
// nilpotent, which in characteristic zero equals the preimage of the
// radical of the associative algebra A generated by ad(r). The radical of
// A is its trace-form kernel (Dickson).
Subspace nilradical_of_solvable(const LieAlgebra& r) {
  const Index d = r.dim();
  if (d == 0) return Subspace::zero(0);

  std::vector<Mat> gens;
  for (Index i = 0; i < d; ++i) gens.push_back(r.ad[static_cast<std::size_t>(i)]);

  std::vector<Mat> basis;
  MatSpan span(d * d);
  for (const auto& m : gens)
    if (span.add(m)) basis.push_back(m);
  for (std::size_t head = 0; head < basis.size(); ++head) {
    for (const auto& g : gens) {
      Mat left = g * basis[head];
      if (span.add(left)) basis.push_back(left);
      Mat right = basis[head] * g;
      if (span.add(right)) basis.push_back(right);
    }
  }

  const Index a = static_cast<Index>(basis.size());
  std::vector<Mat> jac_basis;
  if (a > 0) {
    Mat trace_form(a, a);
    for (Index i = 0; i < a; ++i)
      for (Index j = i; j < a; ++j) {
        Rat t = (basis[static_cast<std::size_t>(i)] *
                 basis[static_cast<std::size_t>(j)])
                    .trace();
        trace_form(i, j) = t;
        trace_form(j, i) = t;
      }
    for (const Vec& coeff : kernel(trace_form)) {
      Mat m = zeros(d, d);
      for (Index i = 0; i < a; ++i)
        if (sgn(coeff(i)) != 0) m += coeff(i) * basis[static_cast<std::size_t>(i)];
      jac_basis.push_back(m);
    }
  }

  MatSpan jac_span(d * d);
  for (const auto& m : jac_basis) jac_span.add(m);

  // x is in the nilradical iff ad(x) lies in the radical span; reduce each
  // ad(e_i) modulo that span and take the kernel of what is left.
  Mat residues(d * d, d);
  for (Index i = 0; i < d; ++i)
    residues.col(i) = reduce_mod_rows(
        jac_span.rows, jac_span.pivots,
        flatten(r.ad[static_cast<std::size_t>(i)]));
  auto null_basis = kernel(residues);
  Mat rows(static_cast<Index>(null_basis.size()), d);
  for (std::size_t i = 0; i < null_basis.size(); ++i)
    rows.row(static_cast<Index>(i)) = null_basis[i].transpose();
  return Subspace::from_rows(d, rows);
}

}  // namespace

Subspace center(const LieAlgebra& g) {
  const Index n = g.dim();
  if (n == 0) return Subspace::zero(0);
  Mat m(n * n, n);
  for (Index i = 0; i < n; ++i)
    m.col(i) = flatten(g.ad[static_cast<std::size_t>(i)]);
  auto null_basis = kernel(m);
  Mat rows(static_cast<Index>(null_basis.size()), n);
  for (std::size_t i = 0; i < null_basis.size(); ++i)
    rows.row(static_cast<Index>(i)) = null_basis[i].transpose();
  return Subspace::from_rows(n, rows);
}

Subspace derived_subalgebra(const LieAlgebra& g) {
  Subspace full = Subspace::full(g.dim());
  return bracket_space(g, full, full);
}

Subspace radical(const LieAlgebra& g) {
  const Index n = g.dim();
  Subspace derived = derived_subalgebra(g);
  if (derived.dim() == 0) return Subspace::full(n);
  Mat k = killing_form(g);
  Mat conditions = derived.span * k;
  auto null_basis = kernel(conditions);
  Mat rows(static_cast<Index>(null_basis.size()), n);
  for (std::size_t i = 0; i < null_basis.size(); ++i)
    rows.row(static_cast<Index>(i)) = null_basis[i].transpose();
  return Subspace::from_rows(n, rows);
}

Subspace nilradical(const LieAlgebra& g) {
  Subspace rad = radical(g);
  if (rad.dim() == 0) return rad;
  LieAlgebra r = subalgebra_from_span(g, rad, g.name + ".rad");
  Subspace nil_in_r = nilradical_of_solvable(r);
  Mat rows = nil_in_r.span * rad.span;
  return Subspace::from_rows(g.dim(), rows);
}

DerivationAlgebra derivation_algebra(const LieAlgebra& g) {
  const Index n = g.dim();
  // Unknown D, column-major flat index c*n + r for entry D(r, c).
  const Index unknowns = n * n;
  std::vector<Vec> rows;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vec cij = g.bracket_basis(i, j);
      for (Index k = 0; k < n; ++k) {
        Vec row = zero_vec(unknowns);
        for (Index c = 0; c < n; ++c)
          if (sgn(cij(c)) != 0) row(c * n + k) += cij(c);
        for (Index r = 0; r < n; ++r) {
          row(i * n + r) -= g.ad[static_cast<std::size_t>(r)](k, j);
          row(j * n + r) -= g.bracket_basis(i, r)(k);
        }
        rows.push_back(std::move(row));
      }
    }
  Mat m(static_cast<Index>(rows.size()), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    m.row(static_cast<Index>(i)) = rows[i].transpose();
  auto null_basis = kernel(m.rows() ? m : Mat(0, unknowns));

  DerivationAlgebra out;
  Mat flat(static_cast<Index>(null_basis.size()), unknowns);
  for (std::size_t b = 0; b < null_basis.size(); ++b) {
    Mat d(n, n);
    for (Index c = 0; c < n; ++c)
      for (Index r = 0; r < n; ++r) d(r, c) = null_basis[b](c * n + r);
    out.basis.push_back(d);
    flat.row(static_cast<Index>(b)) = null_basis[b].transpose();
  }

  Subspace der_span = Subspace::from_rows(unknowns, flat);
  // Re-read the basis off the canonical span so commutator coordinates are
  // solvable against it.
  out.basis.clear();
  for (Index b = 0; b < der_span.dim(); ++b) {
    Mat d(n, n);
    for (Index c = 0; c < n; ++c)
      for (Index r = 0; r < n; ++r) d(r, c) = der_span.span(b, c * n + r);
    out.basis.push_back(d);
  }

  const Index dd = der_span.dim();
  std::vector<BracketEntry> entries;
  for (Index i = 0; i < dd; ++i)
    for (Index j = i + 1; j < dd; ++j) {
      Mat comm = out.basis[static_cast<std::size_t>(i)] *
                     out.basis[static_cast<std::size_t>(j)] -
                 out.basis[static_cast<std::size_t>(j)] *
                     out.basis[static_cast<std::size_t>(i)];
      auto coords = coordinates_in_rows(der_span.span, flatten(comm));
      if (!coords)
        throw Error("derivation algebra is not closed under commutators");
      entries.push_back({i, j, *coords});
    }
  std::vector<std::string> names;
  for (Index i = 0; i < dd; ++i) names.push_back("D" + std::to_string(i + 1));
  out.algebra =
      make_lie_algebra("Der(" + g.name + ")", std::move(names), entries);
  return out;
}

std::vector<Index> derived_series_dims(const LieAlgebra& g) {
  std::vector<Index> dims{g.dim()};
  Subspace current = Subspace::full(g.dim());
  while (true) {
    Subspace next = bracket_space(g, current, current);
    if (next.dim() == current.dim()) break;
    dims.push_back(next.dim());
    current = next;
    if (current.dim() == 0) break;
  }
  return dims;
}

std::vector<Index> lower_central_dims(const LieAlgebra& g) {
  std::vector<Index> dims{g.dim()};
  Subspace full = Subspace::full(g.dim());
  Subspace current = full;
  while (true) {
    Subspace next = bracket_space(g, full, current);
    if (next.dim() == current.dim()) break;
    dims.push_back(next.dim());
    current = next;
    if (current.dim() == 0) break;
  }
  return dims;
}

Fingerprint classify(const LieAlgebra& g) {
  JacobiReport jac = check_jacobi(g);
  if (!jac.ok) {
    std::ostringstream os;
    os << "classify: Jacobi identity fails at triple (" << jac.witness[0]
       << "," << jac.witness[1] << "," << jac.witness[2] << ")";
    throw PreconditionError(os.str());
  }
  Fingerprint fp;
  fp.dim = g.dim();
  fp.dim_center = center(g).dim();
  fp.derived_series_dims = derived_series_dims(g);
  fp.lower_central_dims = lower_central_dims(g);
  fp.dim_radical = radical(g).dim();
  fp.dim_nilradical = nilradical(g).dim();
  fp.dim_derivations = derivation_algebra(g).algebra.dim();
  fp.is_semisimple = sgn(det(killing_form(g))) != 0;
  fp.is_solvable = fp.derived_series_dims.back() == 0;
  fp.is_nilpotent = fp.lower_central_dims.back() == 0;
  fp.is_perfect =
      fp.derived_series_dims.size() == 1 ||
      (fp.derived_series_dims.size() > 1 && fp.derived_series_dims[1] == fp.dim);
  fp.is_abelian =
      fp.derived_series_dims.size() == 1 ? fp.dim == 0
                                         : fp.derived_series_dims[1] == 0;
  fp.is_complete = fp.dim_center == 0 && fp.dim_derivations == fp.dim;
  return fp;
}

bool is_reductive(const LieAlgebra& g) { return radical(g) == center(g); }

bool is_disemisimple_decomposition(const LieAlgebra& g, const Subspace& s1,
                                   const Subspace& s2) {
  if (!is_subalgebra(g, s1) || !is_subalgebra(g, s2)) return false;
  if (!classify(subalgebra_from_span(g, s1)).is_semisimple) return false;
  if (!classify(subalgebra_from_span(g, s2)).is_semisimple) return false;
  return sum(s1, s2).dim() == g.dim();
}

bool is_strongly_disemisimple_decomposition(const LieAlgebra& g,
                                            const Subspace& s1,
                                            const Subspace& s2) {
  return is_disemisimple_decomposition(g, s1, s2) &&
         intersection(s1, s2).dim() == 0;
}

std::string format_fingerprint(const Fingerprint& fp) {
  std::ostringstream os;
  auto series = [](const std::vector<Index>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? " > " : "") + std::to_string(v[i]);
    return s;
  };
  os << "dim            : " << fp.dim << "\n"
     << "center         : " << fp.dim_center << "\n"
     << "derived series : " << series(fp.derived_series_dims) << "\n"
     << "lower central  : " << series(fp.lower_central_dims) << "\n"
     << "radical        : " << fp.dim_radical << "\n"
     << "nilradical     : " << fp.dim_nilradical << "\n"
     << "derivations    : " << fp.dim_derivations << "\n"
     << "flags          :";
  if (fp.is_abelian) os << " abelian";
  if (fp.is_nilpotent) os << " nilpotent";
  if (fp.is_solvable) os << " solvable";
  if (fp.is_semisimple) os << " semisimple";
  if (fp.is_perfect) os << " perfect";
  if (fp.is_complete) os << " complete";
  if (!fp.is_abelian && !fp.is_nilpotent && !fp.is_solvable &&
      !fp.is_semisimple && !fp.is_perfect && !fp.is_complete)
    os << " none";
  os << "\n";
  return os.str();
}

}  // namespace pla
