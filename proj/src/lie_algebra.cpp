#include "pla/lie_algebra.hpp"

#include <algorithm>
#include <set>

#include "pla/errors.hpp"

namespace pla {

std::optional<Index> LieAlgebra::basis_index(const std::string& label) const {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return static_cast<Index>(i);
  return std::nullopt;
}

LieAlgebra make_lie_algebra(std::string name, std::vector<std::string> basis,
                            const std::vector<BracketEntry>& brackets) {
  LieAlgebra g;
  g.name = std::move(name);
  g.basis = std::move(basis);
  const Index n = g.dim();
  g.ad.assign(static_cast<std::size_t>(n), zeros(n, n));
  std::set<std::pair<Index, Index>> seen;
  for (const auto& e : brackets) {
    if (e.left < 0 || e.left >= n || e.right < 0 || e.right >= n)
      throw PreconditionError("bracket entry index out of range");
    if (e.left == e.right)
      throw PreconditionError("bracket entry [e_i, e_i] must be omitted");
    if (e.value.size() != n)
      throw PreconditionError("bracket value has wrong dimension");
    if (!seen.insert({std::min(e.left, e.right), std::max(e.left, e.right)})
             .second)
      throw PreconditionError("duplicate bracket entry");
    g.ad[static_cast<std::size_t>(e.left)].col(e.right) = e.value;
    g.ad[static_cast<std::size_t>(e.right)].col(e.left) = -e.value;
  }
  return g;
}

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y) {
  const Index n = g.dim();
  if (x.size() != n || y.size() != n)
    throw PreconditionError("bracket: dimension mismatch");
  Vec out = zero_vec(n);
  for (Index i = 0; i < n; ++i) {
    if (pla::is_zero(x(i))) continue;
    out += x(i) * (g.ad[static_cast<std::size_t>(i)] * y);
  }
  return out;
}

LinearMap adjoint(const LieAlgebra& g, const Vec& x) {
  const Index n = g.dim();
  if (x.size() != n) throw PreconditionError("adjoint: dimension mismatch");
  Mat m = zeros(n, n);
  for (Index i = 0; i < n; ++i)
    if (!pla::is_zero(x(i))) m += x(i) * g.ad[static_cast<std::size_t>(i)];
  return m;
}

JacobiReport check_jacobi(const LieAlgebra& g) {
  const Index n = g.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j)
      for (Index k = j + 1; k < n; ++k) {
        Vec s = bracket(g, g.bracket_basis(i, j), Vec(identity(n).col(k))) +
                bracket(g, g.bracket_basis(j, k), Vec(identity(n).col(i))) +
                bracket(g, g.bracket_basis(k, i), Vec(identity(n).col(j)));
        if (!is_zero(Mat(s))) return {false, {i, j, k}};
      }
  return {};
}

Mat killing_form(const LieAlgebra& g) {
  const Index n = g.dim();
  Mat k = zeros(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      Rat t = (g.ad[static_cast<std::size_t>(i)] *
               g.ad[static_cast<std::size_t>(j)])
                  .trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return k;
}

bool is_derivation(const LieAlgebra& g, const LinearMap& d) {
  const Index n = g.dim();
  if (d.rows() != n || d.cols() != n)
    throw PreconditionError("is_derivation: dimension mismatch");
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vec lhs = d * g.bracket_basis(i, j);
      Vec rhs = bracket(g, Vec(d.col(i)), Vec(identity(n).col(j))) +
                bracket(g, Vec(identity(n).col(i)), Vec(d.col(j)));
      if (!exact_eq(Mat(lhs), Mat(rhs))) return false;
    }
  return true;
}

namespace {

std::vector<std::string> merged_names(const LieAlgebra& a,
                                      const LieAlgebra& b) {
  std::set<std::string> left(a.basis.begin(), a.basis.end());
  bool collision = std::any_of(b.basis.begin(), b.basis.end(),
                               [&](const auto& s) { return left.count(s); });
  std::vector<std::string> names;
  for (const auto& s : a.basis) names.push_back(collision ? "L." + s : s);
  for (const auto& s : b.basis) names.push_back(collision ? "R." + s : s);
  return names;
}

}  // namespace

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const Index da = a.dim(), db = b.dim(), n = da + db;
  std::vector<BracketEntry> entries;
  for (Index i = 0; i < da; ++i)
    for (Index j = i + 1; j < da; ++j) {
      Vec v = zero_vec(n);
      v.head(da) = a.bracket_basis(i, j);
      entries.push_back({i, j, v});
    }
  for (Index i = 0; i < db; ++i)
    for (Index j = i + 1; j < db; ++j) {
      Vec v = zero_vec(n);
      v.tail(db) = b.bracket_basis(i, j);
      entries.push_back({da + i, da + j, v});
    }
  return make_lie_algebra(a.name + "+" + b.name, merged_names(a, b), entries);
}

LieAlgebra semidirect(const LieAlgebra& h, const LieAlgebra& n,
                      const std::vector<LinearMap>& action, std::string name) {
  const Index dh = h.dim(), dn = n.dim(), d = dh + dn;
  if (static_cast<Index>(action.size()) != dh)
    throw PreconditionError("semidirect: one action map per acting basis "
                            "vector required");
  for (const auto& m : action)
    if (!is_derivation(n, m))
      throw PreconditionError("semidirect: action image is not a derivation");
  for (Index i = 0; i < dh; ++i)
    for (Index j = i + 1; j < dh; ++j) {
      Mat lhs = action[static_cast<std::size_t>(i)] *
                    action[static_cast<std::size_t>(j)] -
                action[static_cast<std::size_t>(j)] *
                    action[static_cast<std::size_t>(i)];
      Mat rhs = zeros(dn, dn);
      Vec c = h.bracket_basis(i, j);
      for (Index k = 0; k < dh; ++k)
        if (!pla::is_zero(c(k)))
          rhs += c(k) * action[static_cast<std::size_t>(k)];
      if (!exact_eq(lhs, rhs))
        throw PreconditionError(
            "semidirect: action is not a Lie algebra homomorphism");
    }

  std::vector<BracketEntry> entries;
  for (Index i = 0; i < dh; ++i)
    for (Index j = i + 1; j < dh; ++j) {
      Vec v = zero_vec(d);
      v.head(dh) = h.bracket_basis(i, j);
      entries.push_back({i, j, v});
    }
  for (Index i = 0; i < dh; ++i)
    for (Index j = 0; j < dn; ++j) {
      Vec v = zero_vec(d);
      v.tail(dn) = action[static_cast<std::size_t>(i)].col(j);
      entries.push_back({i, dh + j, v});
    }
  for (Index i = 0; i < dn; ++i)
    for (Index j = i + 1; j < dn; ++j) {
      Vec v = zero_vec(d);
      v.tail(dn) = n.bracket_basis(i, j);
      entries.push_back({dh + i, dh + j, v});
    }
  LieAlgebra g = make_lie_algebra(
      name.empty() ? h.name + "|x" + n.name : std::move(name),
      merged_names(h, n), entries);
  JacobiReport jac = check_jacobi(g);
  if (!jac.ok)
    throw PreconditionError("semidirect: Jacobi identity fails on result");
  return g;
}

LinearMap exp_ad(const LieAlgebra& g, const Vec& z) {
  Mat ad = adjoint(g, z);
  if (!is_nilpotent_matrix(ad))
    throw PreconditionError("exp_ad: ad(z) is not nilpotent");
  Mat phi = nilpotent_exp(ad);
  const Index n = g.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vec lhs = phi * g.bracket_basis(i, j);
      Vec rhs = bracket(g, Vec(phi.col(i)), Vec(phi.col(j)));
      if (!exact_eq(Mat(lhs), Mat(rhs)))
        throw Error("exp_ad: result is not an automorphism");
    }
  return phi;
}

bool check_isomorphism(const LinearMap& f, const LieAlgebra& g1,
                       const LieAlgebra& g2) {
  const Index n = g1.dim();
  if (g2.dim() != n || f.rows() != n || f.cols() != n)
    throw PreconditionError("check_isomorphism: dimension mismatch");
  if (pla::is_zero(det(f))) return false;
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) {
      Vec lhs = f * g1.bracket_basis(i, j);
      Vec rhs = bracket(g2, Vec(f.col(i)), Vec(f.col(j)));
      if (!exact_eq(Mat(lhs), Mat(rhs))) return false;
    }
  return true;
}

Subspace bracket_space(const LieAlgebra& g, const Subspace& a,
                       const Subspace& b) {
  std::vector<Vec> products;
  for (Index i = 0; i < a.span.rows(); ++i)
    for (Index j = 0; j < b.span.rows(); ++j)
      products.push_back(bracket(g, Vec(a.span.row(i).transpose()),
                                 Vec(b.span.row(j).transpose())));
  Mat rows(static_cast<Index>(products.size()), g.dim());
  for (std::size_t i = 0; i < products.size(); ++i)
    rows.row(static_cast<Index>(i)) = products[i].transpose();
  return Subspace::from_rows(g.dim(), rows);
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient != g.dim())
    throw PreconditionError("subspace does not live in the algebra");
  return s.contains(bracket_space(g, s, s));
}

bool is_ideal(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient != g.dim())
    throw PreconditionError("subspace does not live in the algebra");
  return s.contains(bracket_space(g, Subspace::full(g.dim()), s));
}

LieAlgebra subalgebra_from_span(const LieAlgebra& g, const Subspace& s,
                                std::string name) {
  const Index d = s.dim();
  std::vector<BracketEntry> entries;
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      Vec v = bracket(g, Vec(s.span.row(i).transpose()),
                      Vec(s.span.row(j).transpose()));
      auto coords = coordinates_in_rows(s.span, v);
      if (!coords)
        throw PreconditionError("subalgebra_from_span: span is not closed "
                                "under the bracket");
      entries.push_back({i, j, *coords});
    }
  std::vector<std::string> names;
  for (Index i = 0; i < d; ++i) names.push_back("s" + std::to_string(i + 1));
  return make_lie_algebra(
      name.empty() ? g.name + ".sub" : std::move(name), names, entries);
}

LieAlgebra abelian_algebra(Index dim, std::string name) {
  std::vector<std::string> names;
  for (Index i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return make_lie_algebra(
      name.empty() ? "abelian(" + std::to_string(dim) + ")" : std::move(name),
      names, {});
}

}  // namespace pla
