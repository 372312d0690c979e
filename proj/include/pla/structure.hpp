#pragma once

#include <string>
#include <vector>

#include "pla/lie_algebra.hpp"

namespace pla {

// Isomorphism invariants. Equality of fingerprints is a necessary
// condition for isomorphism, never a proof of it.
struct Fingerprint {
  Index dim = 0;
  Index dim_center = 0;
  std::vector<Index> derived_series_dims;
  std::vector<Index> lower_central_dims;
  Index dim_radical = 0;
  Index dim_nilradical = 0;
  Index dim_derivations = 0;
  bool is_semisimple = false;
  bool is_solvable = false;
  bool is_nilpotent = false;
  bool is_perfect = false;
  bool is_abelian = false;
  bool is_complete = false;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

std::string format_fingerprint(const Fingerprint& fp);

Subspace center(const LieAlgebra& g);
Subspace derived_subalgebra(const LieAlgebra& g);

// Killing-orthogonal complement of [g, g]; equals the solvable radical in
// characteristic zero.
Subspace radical(const LieAlgebra& g);

// Largest nilpotent ideal. Computed as the nilradical of the solvable
// radical r, where x in r is ad-nilpotent iff ad_r(x) lies in the trace
// form radical of the associative closure of ad(r).
Subspace nilradical(const LieAlgebra& g);

struct DerivationAlgebra {
  std::vector<LinearMap> basis;
  LieAlgebra algebra;  // commutator structure in the basis above
};

DerivationAlgebra derivation_algebra(const LieAlgebra& g);

std::vector<Index> derived_series_dims(const LieAlgebra& g);
std::vector<Index> lower_central_dims(const LieAlgebra& g);

// Requires check_jacobi to pass; throws PreconditionError otherwise.
Fingerprint classify(const LieAlgebra& g);

// radical == center, i.e. semisimple-plus-center.
bool is_reductive(const LieAlgebra& g);

// g = s1 + s2 as a vector space sum of two semisimple subalgebras; the
// strong variant additionally requires the sum to be direct.
bool is_disemisimple_decomposition(const LieAlgebra& g, const Subspace& s1,
                                   const Subspace& s2);
bool is_strongly_disemisimple_decomposition(const LieAlgebra& g,
                                            const Subspace& s1,
                                            const Subspace& s2);

}  // namespace pla
