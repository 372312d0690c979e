#include "pla/post_lie.hpp"

#include <set>

#include "pla/errors.hpp"

namespace pla {

LiePair make_pair(LieAlgebra g, LieAlgebra n) {
  if (g.dim() != n.dim())
    throw PreconditionError("pair brackets live on different dimensions");
  return LiePair{std::move(g), std::move(n)};
}

BilinearProduct BilinearProduct::zero(Index dim) {
  BilinearProduct p;
  p.dim = dim;
  p.left.assign(static_cast<std::size_t>(dim), zeros(dim, dim));
  return p;
}

void BilinearProduct::set_entry(Index i, Index j, const Vec& v) {
  if (v.size() != dim)
    throw PreconditionError("product entry has wrong dimension");
  left[static_cast<std::size_t>(i)].col(j) = v;
}

Vec BilinearProduct::apply(const Vec& x, const Vec& y) const {
  if (x.size() != dim || y.size() != dim)
    throw PreconditionError("product: dimension mismatch");
  Vec out = zero_vec(dim);
  for (Index i = 0; i < dim; ++i)
    if (sgn(x(i)) != 0) out += x(i) * (left[static_cast<std::size_t>(i)] * y);
  return out;
}

Mat BilinearProduct::left_mult(const Vec& x) const {
  Mat m = zeros(dim, dim);
  for (Index i = 0; i < dim; ++i)
    if (sgn(x(i)) != 0) m += x(i) * left[static_cast<std::size_t>(i)];
  return m;
}

Mat BilinearProduct::right_mult(const Vec& x) const {
  Mat m = zeros(dim, dim);
  for (Index j = 0; j < dim; ++j) m.col(j) = apply(Vec(identity(dim).col(j)), x);
  return m;
}

bool operator==(const BilinearProduct& a, const BilinearProduct& b) {
  if (a.dim != b.dim) return false;
  for (std::size_t i = 0; i < a.left.size(); ++i)
    if (!exact_eq(a.left[i], b.left[i])) return false;
  return true;
}

BilinearProduct make_product(Index dim, const std::vector<ProductEntry>& entries) {
  BilinearProduct p = BilinearProduct::zero(dim);
  std::set<std::pair<Index, Index>> seen;
  for (const auto& e : entries) {
    if (e.left < 0 || e.left >= dim || e.right < 0 || e.right >= dim)
      throw PreconditionError("product entry index out of range");
    if (!seen.insert({e.left, e.right}).second)
      throw PreconditionError("duplicate product entry");
    p.set_entry(e.left, e.right, e.value);
  }
  return p;
}

AxiomReport check_postlie(const LiePair& pair, const BilinearProduct& prod) {
  const Index n = pair.g.dim();
  if (prod.dim != n)
    throw PreconditionError("check_postlie: dimension mismatch");
  AxiomReport rep;
  for (Index i = 0; i < n && rep.eq1_ok; ++i)
    for (Index j = i + 1; j < n && rep.eq1_ok; ++j) {
      Vec lhs = prod.entry(i, j) - prod.entry(j, i);
      Vec rhs = pair.g.bracket_basis(i, j) - pair.n.bracket_basis(i, j);
      if (!exact_eq(Mat(lhs), Mat(rhs))) {
        rep.eq1_ok = false;
        rep.eq1_witness = {{i, j}};
      }
    }
  for (Index i = 0; i < n && rep.eq2_ok; ++i)
    for (Index j = i + 1; j < n && rep.eq2_ok; ++j)
      for (Index k = 0; k < n && rep.eq2_ok; ++k) {
        Vec ek = identity(n).col(k);
        Vec lhs = prod.apply(pair.g.bracket_basis(i, j), ek);
        Vec rhs = prod.left[static_cast<std::size_t>(i)] * prod.entry(j, k) -
                  prod.left[static_cast<std::size_t>(j)] * prod.entry(i, k);
        if (!exact_eq(Mat(lhs), Mat(rhs))) {
          rep.eq2_ok = false;
          rep.eq2_witness = {{i, j, k}};
        }
      }
  for (Index i = 0; i < n && rep.eq3_ok; ++i)
    for (Index j = 0; j < n && rep.eq3_ok; ++j)
      for (Index k = j + 1; k < n && rep.eq3_ok; ++k) {
        Vec ej = identity(n).col(j), ek = identity(n).col(k);
        Vec lhs = prod.left[static_cast<std::size_t>(i)] * pair.n.bracket_basis(j, k);
        Vec rhs = bracket(pair.n, prod.entry(i, j), ek) +
                  bracket(pair.n, ej, prod.entry(i, k));
        if (!exact_eq(Mat(lhs), Mat(rhs))) {
          rep.eq3_ok = false;
          rep.eq3_witness = {{i, j, k}};
        }
      }
  return rep;
}

PrelieReport check_prelie(const LieAlgebra& g, const BilinearProduct& prod) {
  if (prod.dim != g.dim())
    throw PreconditionError("check_prelie: dimension mismatch");
  AxiomReport rep =
      check_postlie(LiePair{g, abelian_algebra(g.dim())}, prod);
  PrelieReport out;
  out.eq4_ok = rep.eq1_ok;
  out.eq5_ok = rep.eq2_ok;
  out.eq4_witness = rep.eq1_witness;
  out.eq5_witness = rep.eq2_witness;
  return out;
}

InducedAlgebra induced_g(const LieAlgebra& n, const BilinearProduct& prod) {
  if (prod.dim != n.dim())
    throw PreconditionError("induced_g: dimension mismatch");
  std::vector<BracketEntry> entries;
  for (Index i = 0; i < n.dim(); ++i)
    for (Index j = i + 1; j < n.dim(); ++j) {
      Vec v = prod.entry(i, j) - prod.entry(j, i) + n.bracket_basis(i, j);
      entries.push_back({i, j, v});
    }
  InducedAlgebra out;
  out.algebra = make_lie_algebra("induced-g", n.basis, entries);
  out.jacobi = check_jacobi(out.algebra);
  return out;
}

BilinearProduct inner_product_from_map(const LieAlgebra& n, const LinearMap& phi) {
  const Index d = n.dim();
  if (phi.rows() != d || phi.cols() != d)
    throw PreconditionError("inner_product_from_map: dimension mismatch");
  BilinearProduct p = BilinearProduct::zero(d);
  for (Index i = 0; i < d; ++i)
    p.left[static_cast<std::size_t>(i)] = adjoint(n, Vec(phi.col(i)));
  for (Index i = 0; i < d; ++i)
    if (!is_derivation(n, p.left[static_cast<std::size_t>(i)]))
      throw Error("inner product: left multiplication is not a derivation");
  return p;
}

RotaBaxterReport check_rota_baxter(const LieAlgebra& n, const LinearMap& r,
                                   const Rat& weight) {
  const Index d = n.dim();
  if (r.rows() != d || r.cols() != d)
    throw PreconditionError("check_rota_baxter: dimension mismatch");
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      Vec ei = identity(d).col(i), ej = identity(d).col(j);
      Vec lhs = bracket(n, Vec(r.col(i)), Vec(r.col(j)));
      Vec inner = bracket(n, Vec(r.col(i)), ej) + bracket(n, ei, Vec(r.col(j))) +
                  weight * n.bracket_basis(i, j);
      Vec rhs = r * inner;
      if (!exact_eq(Mat(lhs), Mat(rhs))) return {false, {{i, j}}};
    }
  return {};
}

LinearMap rb_from_subalgebra_pair(const LieAlgebra& n, const Subspace& n1,
                                  const Subspace& n2) {
  const Index d = n.dim();
  if (!is_subalgebra(n, n1) || !is_subalgebra(n, n2))
    throw PreconditionError("rb_from_subalgebra_pair: not a subalgebra");
  SubspacePairInfo info = subspace_ops(n1, n2);
  if (!info.is_direct)
    throw PreconditionError("rb_from_subalgebra_pair: sum is not direct");
  if (!info.spans)
    throw PreconditionError("rb_from_subalgebra_pair: sum does not span");
  const Index d1 = n1.dim(), d2 = n2.dim();
  Mat decomp(d, d1 + d2);
  if (d1) decomp.leftCols(d1) = n1.span.transpose();
  if (d2) decomp.rightCols(d2) = n2.span.transpose();
  Mat r = zeros(d, d);
  for (Index j = 0; j < d; ++j) {
    auto sol = solve_affine(decomp, Vec(identity(d).col(j)));
    if (!sol) throw Error("rb_from_subalgebra_pair: decomposition failed");
    if (d2) r.col(j) = -(n2.span.transpose() * sol->particular.tail(d2));
  }
  RotaBaxterReport rep = check_rota_baxter(n, r, Rat(1));
  if (!rep.ok)
    throw Error("rb_from_subalgebra_pair: result fails the Rota-Baxter check");
  return r;
}

BilinearProduct postlie_to_prelie(const LiePair& pair, const BilinearProduct& prod) {
  const LieAlgebra& n = pair.n;
  Subspace derived = derived_subalgebra(n);
  if (bracket_space(n, derived, Subspace::full(n.dim())).dim() != 0)
    throw PreconditionError("postlie_to_prelie: n is not 2-step nilpotent");
  if (!check_postlie(pair, prod).pass())
    throw PreconditionError("postlie_to_prelie: input is not post-Lie");
  BilinearProduct out = BilinearProduct::zero(prod.dim);
  const Rat half(1, 2);
  for (Index i = 0; i < prod.dim; ++i)
    out.left[static_cast<std::size_t>(i)] =
        half * n.ad[static_cast<std::size_t>(i)] +
        prod.left[static_cast<std::size_t>(i)];
  if (!check_prelie(pair.g, out).pass())
    throw Error("postlie_to_prelie: output fails the pre-Lie axioms");
  return out;
}

PairWithProduct direct_sum_products(const LiePair& p1, const BilinearProduct& prod1,
                                    const LiePair& p2, const BilinearProduct& prod2) {
  if (!check_postlie(p1, prod1).pass() || !check_postlie(p2, prod2).pass())
    throw PreconditionError("direct_sum_products: inputs are not post-Lie");
  const Index d1 = p1.g.dim(), d2 = p2.g.dim(), d = d1 + d2;
  PairWithProduct out{
      {direct_sum(p1.g, p2.g), direct_sum(p1.n, p2.n)},
      BilinearProduct::zero(d)};
  for (Index i = 0; i < d1; ++i) {
    out.prod.left[static_cast<std::size_t>(i)].topLeftCorner(d1, d1) =
        prod1.left[static_cast<std::size_t>(i)];
  }
  for (Index i = 0; i < d2; ++i) {
    out.prod.left[static_cast<std::size_t>(d1 + i)].bottomRightCorner(d2, d2) =
        prod2.left[static_cast<std::size_t>(i)];
  }
  if (!check_postlie(out.pair, out.prod).pass())
    throw Error("direct_sum_products: output fails the post-Lie axioms");
  return out;
}

namespace {

Vec flatten_map(const Mat& m) {
  Vec v(m.rows() * m.cols());
  Index k = 0;
  for (Index c = 0; c < m.cols(); ++c)
    for (Index r = 0; r < m.rows(); ++r) v(k++) = m(r, c);
  return v;
}

}  // namespace

EmbeddingResult embedding_into_semidirect(const LiePair& pair,
                                          const BilinearProduct& prod) {
  if (!check_postlie(pair, prod).pass())
    throw PreconditionError("embedding_into_semidirect: input is not post-Lie");
  const Index d = pair.g.dim();

  Mat flat(d, d * d);
  for (Index i = 0; i < d; ++i)
    flat.row(i) = flatten_map(prod.left[static_cast<std::size_t>(i)]).transpose();
  Subspace h_span = Subspace::from_rows(d * d, flat);
  const Index dh = h_span.dim();

  std::vector<Mat> h_basis;
  for (Index b = 0; b < dh; ++b) {
    Mat m(d, d);
    for (Index c = 0; c < d; ++c)
      for (Index r = 0; r < d; ++r) m(r, c) = h_span.span(b, c * d + r);
    h_basis.push_back(m);
  }

  std::vector<BracketEntry> h_entries;
  for (Index i = 0; i < dh; ++i)
    for (Index j = i + 1; j < dh; ++j) {
      Mat comm = h_basis[static_cast<std::size_t>(i)] *
                     h_basis[static_cast<std::size_t>(j)] -
                 h_basis[static_cast<std::size_t>(j)] *
                     h_basis[static_cast<std::size_t>(i)];
      auto coords = coordinates_in_rows(h_span.span, flatten_map(comm));
      if (!coords)
        throw Error("left multiplications do not close under commutators");
      h_entries.push_back({i, j, *coords});
    }
  std::vector<std::string> h_names;
  for (Index i = 0; i < dh; ++i) h_names.push_back("h" + std::to_string(i + 1));
  LieAlgebra h = make_lie_algebra("L(g)", h_names, h_entries);

  EmbeddingResult out;
  out.h = h;
  out.ambient = dh ? semidirect(h, pair.n, h_basis, pair.n.name + "|xDer")
                   : pair.n;

  const Index da = out.ambient.dim();
  Mat map = zeros(da, d);
  for (Index j = 0; j < d; ++j) {
    if (dh) {
      auto coords = coordinates_in_rows(
          h_span.span,
          flatten_map(prod.left[static_cast<std::size_t>(j)]));
      if (!coords) throw Error("left multiplication outside its own span");
      map.col(j).head(dh) = *coords;
    }
    map(dh + j, j) = 1;
  }
  out.map = map;

  out.injective = rref(map).rank == d;
  out.projection_iso = sgn(det(Mat(map.bottomRows(d)))) != 0;
  out.homomorphism = true;
  for (Index i = 0; i < d && out.homomorphism; ++i)
    for (Index j = i + 1; j < d && out.homomorphism; ++j) {
      Vec lhs = map * pair.g.bracket_basis(i, j);
      Vec rhs = bracket(out.ambient, Vec(map.col(i)), Vec(map.col(j)));
      if (!exact_eq(Mat(lhs), Mat(rhs))) out.homomorphism = false;
    }
  return out;
}

PairWithProduct prop52_structure(Index n) {
  if (n < 2) throw PreconditionError("prop52_structure requires n >= 2");
  const Index nn = n * n, d = nn + 1;
  auto eidx = [n](Index a, Index b) { return a * n + b; };

  std::vector<std::string> names;
  for (Index i = 0; i < nn; ++i) names.push_back("y" + std::to_string(i + 1));
  names.push_back("x");

  // g = gl_n + C: matrix commutators on the y block, x central.
  std::vector<BracketEntry> g_entries;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index e = 0; e < n; ++e) {
          Index i = eidx(a, b), j = eidx(c, e);
          if (i >= j) continue;
          Vec v = zero_vec(d);
          if (b == c) v(eidx(a, e)) += 1;
          if (e == a) v(eidx(c, b)) -= 1;
          if (!is_zero(Mat(v))) g_entries.push_back({i, j, v});
        }
  LieAlgebra g = make_lie_algebra("gl" + std::to_string(n) + "+C", names,
                                  g_entries);

  // n: {x, y_i} = y_i.
  std::vector<BracketEntry> n_entries;
  for (Index i = 0; i < nn; ++i) {
    Vec v = zero_vec(d);
    v(i) = -1;  // {y_i, x} = -y_i
    n_entries.push_back({i, nn, v});
  }
  LieAlgebra nalg = make_lie_algebra("solv" + std::to_string(d), names,
                                     n_entries);

  // Product: associative matrix product on the y block (a pre-Lie
  // structure on gl_n), x . y_i = -y_i, y_i . x = x . x = 0.
  BilinearProduct prod = BilinearProduct::zero(d);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        for (Index e = 0; e < n; ++e) {
          if (b != c) continue;
          Vec v = zero_vec(d);
          v(eidx(a, e)) = 1;
          prod.set_entry(eidx(a, b), eidx(c, e), v);
        }
  for (Index i = 0; i < nn; ++i) {
    Vec v = zero_vec(d);
    v(i) = -1;
    prod.set_entry(nn, i, v);
  }

  PairWithProduct out{make_pair(std::move(g), std::move(nalg)), std::move(prod)};
  if (!check_postlie(out.pair, out.prod).pass())
    throw Error("prop52_structure: axioms fail");
  return out;
}

}  // namespace pla
