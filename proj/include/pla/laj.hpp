#pragma once

#include <string>

#include "pla/post_lie.hpp"
#include "pla/solver.hpp"

namespace pla {

// LAJ documents are JSON text. Algebras (.laj) store the bracket table
// with left index < right index only; products (.lajp) store the full
// table with no symmetry convention; linear maps (.lajm) store a
// row-major grid whose column j is the image of basis vector j. All
// scalars are rational strings "p" or "p/q" with q > 0; decimals are
// rejected.

LieAlgebra parse_algebra(const std::string& text);
std::string emit_algebra(const LieAlgebra& g);

struct ProductDocument {
  std::string name;
  std::vector<std::string> basis;
  BilinearProduct prod;
};

ProductDocument parse_product(const std::string& text);
std::string emit_product(const BilinearProduct& prod,
                         const std::vector<std::string>& basis,
                         const std::string& name);

struct MapDocument {
  std::string name;
  LinearMap matrix;
};

MapDocument parse_map(const std::string& text);
std::string emit_map(const LinearMap& m, const std::string& name);

// Support masks list the positions allowed to be nonzero, by basis name.
SupportMask parse_support_mask(const std::string& text,
                               const std::vector<std::string>& basis);

// Linear combination over basis names, e.g. "e3+e5", "2e1 - 1/2 e4".
Vec parse_combination(const std::vector<std::string>& basis,
                      const std::string& text);

// Comma-separated combinations spanning a subspace, e.g. "e2, e3+e5".
Subspace parse_span(const std::vector<std::string>& basis,
                    const std::string& text);

std::string format_combination(const std::vector<std::string>& basis,
                               const Vec& v);

}  // namespace pla
