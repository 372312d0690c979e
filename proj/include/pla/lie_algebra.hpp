#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pla/subspace.hpp"

namespace pla {

// Lie algebra given by structure constants on a fixed ordered basis.
// ad[i] is the matrix of ad(e_i); its column j holds [e_i, e_j].
// Antisymmetry is enforced on construction, the Jacobi identity is a
// separate check so that deliberately broken tables remain expressible.
struct LieAlgebra {
  std::string name;
  std::vector<std::string> basis;
  std::vector<Mat> ad;

  Index dim() const { return static_cast<Index>(basis.size()); }
  Vec bracket_basis(Index i, Index j) const { return ad[i].col(j); }
  std::optional<Index> basis_index(const std::string& label) const;
};

struct BracketEntry {
  Index left;
  Index right;
  Vec value;
};

LieAlgebra make_lie_algebra(std::string name, std::vector<std::string> basis,
                            const std::vector<BracketEntry>& brackets);

Vec bracket(const LieAlgebra& g, const Vec& x, const Vec& y);
LinearMap adjoint(const LieAlgebra& g, const Vec& x);

struct JacobiReport {
  bool ok = true;
  std::array<Index, 3> witness{};  // first failing triple when !ok
};

JacobiReport check_jacobi(const LieAlgebra& g);

// K[i][j] = trace(ad e_i . ad e_j)
Mat killing_form(const LieAlgebra& g);

bool is_derivation(const LieAlgebra& g, const LinearMap& d);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

// h acting on n through the given derivations (one per h basis vector).
// Throws when an action image is not a derivation of n or the action is
// not a Lie algebra homomorphism.
LieAlgebra semidirect(const LieAlgebra& h, const LieAlgebra& n,
                      const std::vector<LinearMap>& action,
                      std::string name = {});

// exp(ad z) for ad-nilpotent z; the result is checked to be a bracket
// preserving invertible map.
LinearMap exp_ad(const LieAlgebra& g, const Vec& z);

bool check_isomorphism(const LinearMap& f, const LieAlgebra& g1,
                       const LieAlgebra& g2);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);
bool is_ideal(const LieAlgebra& g, const Subspace& s);

// The Lie algebra induced on a bracket-closed subspace, in span coordinates.
LieAlgebra subalgebra_from_span(const LieAlgebra& g, const Subspace& s,
                                std::string name = {});

// Span of all [a, b] with a in A, b in B.
Subspace bracket_space(const LieAlgebra& g, const Subspace& a,
                       const Subspace& b);

LieAlgebra abelian_algebra(Index dim, std::string name = {});

}  // namespace pla
