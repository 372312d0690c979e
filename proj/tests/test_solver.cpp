#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pla/catalog.hpp"
#include "pla/errors.hpp"
#include "pla/laj.hpp"
#include "pla/solver.hpp"

using namespace pla;

namespace {

// Does the affine space contain this exact product tensor?
bool space_contains(const AffineSolutionSpace& space,
                    const BilinearProduct& prod) {
  Vec flat(space.flat_dim);
  Index d = prod.dim;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        flat((i * d + j) * d + k) = prod.entry(i, j)(k);
  Vec target = flat - space.particular;
  if (space.basis.cols() == 0) return is_zero(Mat(target));
  auto sol = solve_affine(space.basis, target);
  return sol.has_value();
}

bool contains_product(const SolutionSet& set, const BilinearProduct& prod) {
  for (const auto& s : set.solutions)
    if (s.prod == prod) return true;
  return false;
}

}  // namespace

TEST_CASE("grid values") {
  Ansatz a;
  auto values = a.grid_values();  // bound 1, denominators {1, 2}
  REQUIRE(values.size() == 5);
  CHECK(values[0] == rat(-1));
  CHECK(values[1] == rat(-1, 2));
  CHECK(values[2] == rat(0));
  CHECK(values[3] == rat(1, 2));
  CHECK(values[4] == rat(1));

  a.denominators = {1};
  a.bound = 2;
  values = a.grid_values();
  REQUIRE(values.size() == 5);
  CHECK(values.front() == rat(-2));
  CHECK(values.back() == rat(2));

  a.denominators = {};
  CHECK_THROWS_AS(a.grid_values(), PreconditionError);
}

TEST_CASE("linear stage on (g, g) contains the zero product") {
  for (const char* name : {"sl2", "r3", "gl2"}) {
    LieAlgebra g = catalog::algebra(name);
    auto space = linear_stage(make_pair(g, g));
    REQUIRE(space.has_value());
    CHECK(space_contains(*space, BilinearProduct::zero(g.dim())));
  }
}

TEST_CASE("linear stage contains the printed witnesses") {
  auto ex31 = catalog::pair_fixture("ex31-pair");
  auto space = linear_stage(ex31.pair);
  REQUIRE(space.has_value());
  CHECK(space_contains(*space, ex31.prod));

  auto lr = catalog::pair_fixture("lr-n3");
  auto lr_space = linear_stage(lr.pair);
  REQUIRE(lr_space.has_value());
  CHECK(lr_space->dim() > 0);
  CHECK(space_contains(*lr_space, lr.prod));
}

TEST_CASE("linear stage inconsistency is a proof") {
  LiePair pair = make_pair(catalog::algebra("sl2"), catalog::algebra("r3"));
  CHECK_FALSE(linear_stage(pair).has_value());

  NonexistenceReport rep = nonexistence_report(pair, Ansatz{});
  CHECK(rep.kind == NonexistenceKind::ProvenEmpty);
  CHECK(rep.grid_exhausted);
  CHECK_FALSE(rep.witness.has_value());
}

TEST_CASE("grid search rediscovers the ex31 product at bound 1") {
  auto ex31 = catalog::pair_fixture("ex31-pair");
  auto space = linear_stage(ex31.pair);
  REQUIRE(space.has_value());
  SolutionSet set = grid_search(ex31.pair, *space, Ansatz{});
  CHECK(set.exhausted);
  CHECK(contains_product(set, ex31.prod));
  for (const auto& s : set.solutions) {
    CHECK(s.report.pass());
    CHECK(s.induced_jacobi_ok);
  }
}

TEST_CASE("determinism across runs and thread counts") {
  auto ex31 = catalog::pair_fixture("ex31-pair");
  auto space = linear_stage(ex31.pair);
  REQUIRE(space.has_value());

  Ansatz one;
  one.threads = 1;
  Ansatz two;
  two.threads = 2;
  SolutionSet a = grid_search(ex31.pair, *space, one);
  SolutionSet b = grid_search(ex31.pair, *space, two);
  SolutionSet c = grid_search(ex31.pair, *space, one);
  REQUIRE(a.solutions.size() == b.solutions.size());
  REQUIRE(a.solutions.size() == c.solutions.size());
  for (std::size_t i = 0; i < a.solutions.size(); ++i) {
    CHECK(exact_eq(Mat(a.solutions[i].t), Mat(b.solutions[i].t)));
    CHECK(exact_eq(Mat(a.solutions[i].t), Mat(c.solutions[i].t)));
    CHECK(a.solutions[i].prod == b.solutions[i].prod);
  }
  // lexicographic order over grid coordinates
  for (std::size_t i = 1; i < a.solutions.size(); ++i) {
    const Vec& prev = a.solutions[i - 1].t;
    const Vec& cur = a.solutions[i].t;
    bool less = false;
    for (Index q = 0; q < prev.size(); ++q) {
      if (prev(q) != cur(q)) {
        less = prev(q) < cur(q);
        break;
      }
    }
    CHECK(less);
  }
}

TEST_CASE("max-solutions truncates deterministically") {
  auto lr = catalog::pair_fixture("lr-n3");
  auto space = linear_stage(lr.pair);
  REQUIRE(space.has_value());
  Ansatz capped;
  capped.max_solutions = 5;
  SolutionSet set = grid_search(lr.pair, *space, capped);
  CHECK(set.solutions.size() == 5);
  CHECK_FALSE(set.exhausted);
  SolutionSet again = grid_search(lr.pair, *space, capped);
  for (std::size_t i = 0; i < 5; ++i)
    CHECK(exact_eq(Mat(set.solutions[i].t), Mat(again.solutions[i].t)));
}

TEST_CASE("parameter cap") {
  LiePair pair = make_pair(catalog::algebra("gl2"),
                           catalog::algebra("n3-plus-c"));
  auto space = linear_stage(pair);
  REQUIRE(space.has_value());
  CHECK(space->dim() == 18);
  Ansatz tiny;
  tiny.param_cap = 4;
  CHECK_THROWS_AS(grid_search(pair, *space, tiny), CapExceeded);

  // the full 6x6 operator grid must refuse to run
  Ansatz dflt;
  CHECK_THROWS_AS(search_rb(catalog::algebra("sl2-plus-sl2"), dflt),
                  CapExceeded);
}

TEST_CASE("support masks pin entries to zero") {
  auto ex31 = catalog::pair_fixture("ex31-pair");
  SupportMask mask;
  mask.allowed = {{0, 2}};  // only e1 . e3 free
  auto space = linear_stage(ex31.pair, mask);
  REQUIRE(space.has_value());
  SolutionSet set = grid_search(ex31.pair, *space, Ansatz{});
  CHECK(contains_product(set, ex31.prod));
  for (const auto& s : set.solutions)
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j)
        if (!(i == 0 && j == 2)) CHECK(is_zero(Mat(s.prod.entry(i, j))));
}

TEST_CASE("operator search finds the trivial and printed operators") {
  LieAlgebra r2 = catalog::algebra("r2");
  RBSolutionSet set = search_rb(r2, Ansatz{});
  CHECK(set.exhausted);
  bool zero = false, neg = false;
  for (const auto& s : set.solutions) {
    CHECK(check_rota_baxter(r2, s.op, Rat(1)).ok);
    if (s.induced_jacobi_ok) CHECK(s.postlie_ok);
    if (is_zero(s.op)) zero = true;
    if (exact_eq(s.op, Mat(-identity(2)))) neg = true;
  }
  CHECK(zero);
  CHECK(neg);

  // abelian: every operator on the grid passes
  Ansatz a;
  RBSolutionSet ab = search_rb(catalog::abelian(1), a);
  CHECK(ab.solutions.size() == a.grid_values().size());

  auto p44 = catalog::prop44();
  Ansatz masked;
  SupportMask mask;
  mask.allowed = {{1, 1}, {2, 4}, {4, 4}};
  masked.support = mask;
  RBSolutionSet found = search_rb(p44.n, masked);
  bool has_phi = false;
  for (const auto& s : found.solutions)
    if (exact_eq(s.op, p44.phi)) has_phi = true;
  CHECK(has_phi);
}

TEST_CASE("nonexistence reports") {
  Ansatz a;
  LieAlgebra sl2 = catalog::algebra("sl2");
  NonexistenceReport self = nonexistence_report(make_pair(sl2, sl2), a);
  CHECK(self.kind == NonexistenceKind::WitnessFound);
  REQUIRE(self.witness.has_value());
  CHECK(self.witness->report.pass());

  NonexistenceReport proven = nonexistence_report(
      make_pair(catalog::algebra("gl2"), catalog::algebra("r2-plus-r2")), a);
  CHECK(proven.kind == NonexistenceKind::ProvenEmpty);

  NonexistenceReport grid = nonexistence_report(
      make_pair(sl2, catalog::algebra("n3")), a);
  CHECK(grid.kind == NonexistenceKind::GridEmpty);
  CHECK(grid.grid_exhausted);
  CHECK(grid.free_parameters == 9);
}

TEST_CASE("solutions carry verified reports and fingerprints") {
  auto lr = catalog::pair_fixture("lr-r2");
  auto space = linear_stage(lr.pair);
  REQUIRE(space.has_value());
  SolutionSet set = grid_search(lr.pair, *space, Ansatz{});
  CHECK(set.exhausted);
  CHECK(contains_product(set, lr.prod));
  for (const auto& s : set.solutions) {
    CHECK(s.report.pass());
    if (s.induced_jacobi_ok)
      CHECK(s.induced_fingerprint.dim == 2);
  }
}
