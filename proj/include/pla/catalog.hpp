#pragma once

#include <string>
#include <vector>

#include "pla/laj.hpp"
#include "pla/post_lie.hpp"

namespace pla::catalog {

// Fixture registry. Paper tables are parsed from data files embedded at
// build time; generic families (gl_n, sl_n, aff_n, abelian, Heisenberg,
// filiform) are constructed.

struct EntryInfo {
  std::string name;
  std::string kind;  // "algebra" | "pair" | "fixture"
  std::string provenance;
};

std::vector<EntryInfo> list();

bool has_algebra(const std::string& name);
LieAlgebra algebra(const std::string& name);

LieAlgebra gl(Index n);
LieAlgebra sl(Index n);
LieAlgebra aff(Index n);
LieAlgebra abelian(Index n);

struct PairFixture {
  std::string name;
  std::string provenance;
  LiePair pair;
  BilinearProduct prod;
};

bool has_pair(const std::string& name);
PairFixture pair_fixture(const std::string& name);

struct Prop43Fixture {
  LieAlgebra n;          // sl3 in the e1..e8 fixture basis
  LinearMap phi;
  BilinearProduct product;   // printed product table
  LieAlgebra induced;        // printed bracket table for g
  LinearMap f;               // isomorphism onto aff2 + aff1
  LieAlgebra target;         // aff2 + aff1 in the f1..f8 fixture basis
};
Prop43Fixture prop43();

struct Prop44Fixture {
  LieAlgebra n;  // sl2 + sl2
  Subspace n1;
  Subspace n2;
  LinearMap phi;
  BilinearProduct product;
  LieAlgebra induced;
  std::vector<Subspace> ideals;  // <e1,e3>, <e4,e6>, <e2,e3+e5>
};
Prop44Fixture prop44();

struct Remark26Fixture {
  LieAlgebra ambient;  // sl2 acting on its natural 2-dim module
  Vec z;               // (1,0) in the module
  Subspace s1;         // the sl2 block
};
Remark26Fixture remark26();

// Raw embedded data documents (filename -> content).
std::vector<std::string> embedded_names();
std::string embedded_document(const std::string& filename);

// Normalized LAJ documents for an entry, as (filename, content) pairs.
std::vector<std::pair<std::string, std::string>> emit_documents(
    const std::string& name);

}  // namespace pla::catalog
