#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pla/structure.hpp"

namespace pla {

// Two Lie brackets on the same coordinate space.
struct LiePair {
  LieAlgebra g;  // bracket [x, y]
  LieAlgebra n;  // bracket {x, y}
};

LiePair make_pair(LieAlgebra g, LieAlgebra n);

// Full (non-symmetric) bilinear product; left[i] is the left
// multiplication L(e_i), so column j holds e_i . e_j.
struct BilinearProduct {
  Index dim = 0;
  std::vector<Mat> left;

  static BilinearProduct zero(Index dim);
  Vec entry(Index i, Index j) const { return left[static_cast<std::size_t>(i)].col(j); }
  void set_entry(Index i, Index j, const Vec& v);
  Vec apply(const Vec& x, const Vec& y) const;
  Mat left_mult(const Vec& x) const;
  Mat right_mult(const Vec& x) const;

  friend bool operator==(const BilinearProduct& a, const BilinearProduct& b);
};

struct ProductEntry {
  Index left;
  Index right;
  Vec value;
};

BilinearProduct make_product(Index dim, const std::vector<ProductEntry>& entries);

struct AxiomReport {
  bool eq1_ok = true;  // x.y - y.x = [x,y] - {x,y}
  bool eq2_ok = true;  // [x,y].z = x.(y.z) - y.(x.z)
  bool eq3_ok = true;  // x.{y,z} = {x.y,z} + {y,x.z}
  std::optional<std::array<Index, 2>> eq1_witness;
  std::optional<std::array<Index, 3>> eq2_witness;
  std::optional<std::array<Index, 3>> eq3_witness;

  bool pass() const { return eq1_ok && eq2_ok && eq3_ok; }
};

AxiomReport check_postlie(const LiePair& pair, const BilinearProduct& prod);

struct PrelieReport {
  bool eq4_ok = true;  // x.y - y.x = [x,y]
  bool eq5_ok = true;  // [x,y].z = x.(y.z) - y.(x.z)
  std::optional<std::array<Index, 2>> eq4_witness;
  std::optional<std::array<Index, 3>> eq5_witness;

  bool pass() const { return eq4_ok && eq5_ok; }
};

PrelieReport check_prelie(const LieAlgebra& g, const BilinearProduct& prod);

struct InducedAlgebra {
  LieAlgebra algebra;  // [x,y] = x.y - y.x + {x,y}
  JacobiReport jacobi;
};

InducedAlgebra induced_g(const LieAlgebra& n, const BilinearProduct& prod);

// x.y = {phi(x), y}; every left multiplication is the inner derivation
// ad(phi(x)) of n.
BilinearProduct inner_product_from_map(const LieAlgebra& n, const LinearMap& phi);

struct RotaBaxterReport {
  bool ok = true;
  std::optional<std::array<Index, 2>> witness;
};

// {Rx, Ry} = R({Rx, y} + {x, Ry} + weight {x, y})
RotaBaxterReport check_rota_baxter(const LieAlgebra& n, const LinearMap& r,
                                   const Rat& weight);

// R(u + v) = -v for u in n1, v in n2; requires two subalgebras forming a
// direct spanning vector space sum.
LinearMap rb_from_subalgebra_pair(const LieAlgebra& n, const Subspace& n1,
                                  const Subspace& n2);

// x o y = 1/2 {x, y} + x . y. Requires n 2-step nilpotent and a valid
// post-Lie product; the result is a pre-Lie structure on g.
BilinearProduct postlie_to_prelie(const LiePair& pair, const BilinearProduct& prod);

struct PairWithProduct {
  LiePair pair;
  BilinearProduct prod;
};

PairWithProduct direct_sum_products(const LiePair& p1, const BilinearProduct& prod1,
                                    const LiePair& p2, const BilinearProduct& prod2);

struct EmbeddingResult {
  LieAlgebra ambient;        // n semidirect h, h = span of left multiplications
  LieAlgebra h;              // abstract structure of the span
  LinearMap map;             // x -> (L(x), x) in ambient coordinates
  bool injective = false;
  bool homomorphism = false;
  bool projection_iso = false;  // projection to the n block is invertible

  bool ok() const { return injective && homomorphism && projection_iso; }
};

EmbeddingResult embedding_into_semidirect(const LiePair& pair,
                                          const BilinearProduct& prod);

// The reductive pair of Prop-5.2 shape: g = gl_n + C with basis
// (y_1..y_{n^2}, x), n solvable with {x, y_i} = y_i, matrix-product
// pre-Lie structure on the y block and x . y_i = -y_i.
PairWithProduct prop52_structure(Index n);

}  // namespace pla
