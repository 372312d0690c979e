#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pla/catalog.hpp"
#include "pla/errors.hpp"
#include "pla/laj.hpp"
#include "pla/structure.hpp"

using namespace pla;

TEST_CASE("classify gl2") {
  LieAlgebra gl2 = catalog::algebra("gl2");
  Fingerprint fp = classify(gl2);
  CHECK(fp.dim_center == 1);
  CHECK(fp.dim_radical == 1);
  CHECK(fp.dim_nilradical == 1);
  CHECK_FALSE(fp.is_semisimple);
  CHECK_FALSE(fp.is_solvable);
  CHECK(is_reductive(gl2));
  Subspace id_span = parse_span(gl2.basis, "E11+E22");
  CHECK(radical(gl2) == id_span);
  CHECK(nilradical(gl2) == id_span);
}

TEST_CASE("classify sl2 |x V(2)") {
  LieAlgebra g = catalog::algebra("sl2-semidirect-v2");
  Fingerprint fp = classify(g);
  CHECK(fp.is_perfect);
  Subspace v2 = parse_span(g.basis, "v1, v2");
  CHECK(radical(g) == v2);
  CHECK(nilradical(g) == v2);
  CHECK_FALSE(fp.is_semisimple);
}

TEST_CASE("classify aff2 + aff1 as simply complete") {
  Fingerprint fp = classify(catalog::algebra("aff2-plus-aff1"));
  CHECK(fp.is_complete);
  CHECK(fp.dim_center == 0);
  CHECK(fp.dim_derivations == 8);
  CHECK_FALSE(fp.is_semisimple);
}

TEST_CASE("derivation algebra dimensions") {
  CHECK(derivation_algebra(abelian_algebra(2)).algebra.dim() == 4);

  LieAlgebra n3 = catalog::algebra("n3");
  DerivationAlgebra der = derivation_algebra(n3);
  CHECK(der.algebra.dim() == 6);
  for (const LinearMap& d : der.basis) CHECK(is_derivation(n3, d));

  // Independent oracle: solve the 9-unknown system D[e1,e2] = [De1,e2] +
  // [e1,De2] etc. directly. Unknowns D(r,c) flattened column-major.
  Mat sys(9, 9);
  sys.setZero();
  Index row = 0;
  for (Index i = 0; i < 3; ++i)
    for (Index j = i + 1; j < 3; ++j)
      for (Index k = 0; k < 3; ++k) {
        Vec cij = n3.bracket_basis(i, j);
        for (Index c = 0; c < 3; ++c)
          if (sgn(cij(c)) != 0) sys(row, c * 3 + k) += cij(c);
        for (Index r = 0; r < 3; ++r) {
          sys(row, i * 3 + r) -= n3.bracket_basis(r, j)(k);
          sys(row, j * 3 + r) -= n3.bracket_basis(i, r)(k);
        }
        ++row;
      }
  CHECK(kernel(sys).size() == 6);

  CHECK(derivation_algebra(catalog::algebra("r3")).algebra.dim() == 4);
  CHECK(derivation_algebra(catalog::algebra("r31")).algebra.dim() == 6);
  CHECK(classify(derivation_algebra(catalog::algebra("n4")).algebra).is_solvable);
}

TEST_CASE("radical is an ideal and contains the nilradical") {
  for (const char* name :
       {"r2", "r3", "r31", "n3", "n4", "gl2", "sl2", "sl2-plus-sl2",
        "aff2-plus-aff1", "sl2-semidirect-v2", "n3-plus-c", "r2-plus-r2"}) {
    LieAlgebra g = catalog::algebra(name);
    Subspace rad = radical(g);
    Subspace nil = nilradical(g);
    CHECK(is_ideal(g, rad));
    CHECK(is_ideal(g, nil));
    CHECK(rad.contains(nil));
  }
}

TEST_CASE("semisimplicity criteria agree") {
  for (const char* name :
       {"r2", "r3", "r31", "n3", "n4", "gl2", "gl3", "sl2", "sl3",
        "sl2-plus-sl2", "aff1", "aff2", "aff2-plus-aff1",
        "sl2-semidirect-v2", "abelian(3)", "n3-plus-c", "r2-plus-r2",
        "prop43-induced-g", "prop44-induced-g"}) {
    LieAlgebra g = catalog::algebra(name);
    Fingerprint fp = classify(g);
    bool killing_nondegenerate = sgn(det(killing_form(g))) != 0;
    CHECK(fp.is_semisimple == killing_nondegenerate);
    CHECK(fp.is_semisimple == (fp.dim_radical == 0));
  }
}

TEST_CASE("nilradical table") {
  auto nil_of = [](const std::string& name) {
    LieAlgebra g = catalog::algebra(name);
    return std::make_pair(g, nilradical(g));
  };
  {
    auto [g, nil] = nil_of("r2");
    CHECK(nil == parse_span(g.basis, "e2"));
  }
  {
    auto [g, nil] = nil_of("r3");
    CHECK(nil == parse_span(g.basis, "e2, e3"));
  }
  {
    auto [g, nil] = nil_of("r31");
    CHECK(nil == parse_span(g.basis, "e2, e3"));
  }
  {
    auto [g, nil] = nil_of("n4");
    CHECK(nil.dim() == 4);
  }
  {
    auto [g, nil] = nil_of("abelian(4)");
    CHECK(nil.dim() == 4);
  }
  {
    auto [g, nil] = nil_of("sl3");
    CHECK(nil.dim() == 0);
  }
  {
    // radical strictly larger than the nilradical: the identity block of
    // aff2 and f8 act non-nilpotently
    auto [g, nil] = nil_of("aff2-plus-aff1");
    CHECK(radical(g) == parse_span(g.basis, "f1+f4, f5, f6, f7, f8"));
    CHECK(nil == parse_span(g.basis, "f5, f6, f7"));
  }
}

TEST_CASE("series dimensions") {
  Fingerprint r3 = classify(catalog::algebra("r3"));
  CHECK(r3.derived_series_dims == std::vector<Index>{3, 2, 0});
  CHECK(r3.lower_central_dims == std::vector<Index>{3, 2});
  CHECK(r3.is_solvable);
  CHECK_FALSE(r3.is_nilpotent);

  Fingerprint n4 = classify(catalog::algebra("n4"));
  CHECK(n4.lower_central_dims == std::vector<Index>{4, 2, 1, 0});
  CHECK(n4.is_nilpotent);

  Fingerprint ab = classify(abelian_algebra(3));
  CHECK(ab.is_abelian);
  CHECK(ab.is_nilpotent);
  CHECK(ab.dim_derivations == 9);
}

TEST_CASE("fingerprint equality is necessary for isomorphism") {
  auto p43 = catalog::prop43();
  REQUIRE(check_isomorphism(p43.f, p43.induced, p43.target));
  CHECK(classify(p43.induced) == classify(p43.target));

  // and sensitive enough to separate the catalog's solvable pair
  CHECK_FALSE(classify(catalog::algebra("r3")) ==
              classify(catalog::algebra("r31")));
}

TEST_CASE("classify requires Jacobi") {
  LieAlgebra broken = make_lie_algebra(
      "broken", {"e1", "e2", "e3"},
      {{0, 1, parse_combination({"e1", "e2", "e3"}, "e3")},
       {0, 2, parse_combination({"e1", "e2", "e3"}, "e1")},
       {1, 2, parse_combination({"e1", "e2", "e3"}, "e2")}});
  REQUIRE_FALSE(check_jacobi(broken).ok);
  CHECK_THROWS_AS(classify(broken), PreconditionError);
}

TEST_CASE("fingerprint flags are internally consistent") {
  for (const char* name :
       {"r2", "r3", "r31", "n3", "n4", "gl2", "sl2", "sl3", "sl2-plus-sl2",
        "aff1", "aff2", "aff2-plus-aff1", "sl2-semidirect-v2", "abelian(3)",
        "n3-plus-c", "r2-plus-r2", "prop43-induced-g", "prop44-induced-g"}) {
    Fingerprint fp = classify(catalog::algebra(name));
    if (fp.is_nilpotent) CHECK(fp.is_solvable);
    if (fp.is_abelian) CHECK(fp.is_nilpotent);
    if (fp.is_semisimple) CHECK(fp.dim_radical == 0);
    if (fp.is_complete) {
      CHECK(fp.dim_center == 0);
      CHECK(fp.dim_derivations == fp.dim);
    }
    CHECK(fp.dim_nilradical <= fp.dim_radical);
  }
}

TEST_CASE("disemisimple decomposition predicates") {
  LieAlgebra ss = catalog::algebra("sl2-plus-sl2");
  Subspace s1 = parse_span(ss.basis, "e1, e2, e3");
  Subspace delta = parse_span(ss.basis, "e1+e4, e2+e5, e3+e6");
  CHECK(is_strongly_disemisimple_decomposition(ss, s1, delta));
  CHECK(is_disemisimple_decomposition(ss, s1, delta));
  // same part twice: semisimple subalgebras but the sum does not span
  CHECK_FALSE(is_disemisimple_decomposition(ss, s1, s1));
  // solvable parts never qualify
  LieAlgebra r2r2 = catalog::algebra("r2-plus-r2");
  Subspace a = parse_span(r2r2.basis, "e1, e2");
  Subspace b = parse_span(r2r2.basis, "e3, e4");
  CHECK_FALSE(is_disemisimple_decomposition(r2r2, a, b));
  // a disemisimple but not strongly disemisimple sum
  auto rem = catalog::remark26();
  Subspace s2 = map_subspace(exp_ad(rem.ambient, rem.z), rem.s1);
  CHECK(is_disemisimple_decomposition(rem.ambient, rem.s1, s2));
  CHECK_FALSE(is_strongly_disemisimple_decomposition(rem.ambient, rem.s1, s2));
}
