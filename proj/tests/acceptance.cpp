// Acceptance suite: one pass/fail line per criterion, nonzero exit when
// any criterion fails. Criteria touching the command surface run the
// real CLI binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "pla/catalog.hpp"
#include "pla/errors.hpp"
#include "pla/laj.hpp"
#include "pla/paper_suite.hpp"
#include "pla/solver.hpp"

using namespace pla;

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
  double seconds = 0;
};

CommandResult run_command(const std::string& cmd) {
  CommandResult res;
  auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) return res;
  std::array<char, 4096> buf;
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
    res.output.append(buf.data(), n);
  int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  return res;
}

const std::string kCli = PLAS_CLI_PATH;

struct Checker {
  std::ostringstream detail;

  void expect(bool cond, const std::string& msg) {
    if (!cond) {
      if (detail.tellp() > 0) detail << "; ";
      detail << msg;
    }
  }
};

int failures = 0;

void criterion(int number, const std::string& label,
               const std::function<void(Checker&)>& body) {
  Checker c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.expect(false, std::string("exception: ") + e.what());
  }
  std::string detail = c.detail.str();
  if (detail.empty()) {
    std::printf("[PASS] criterion %2d: %s\n", number, label.c_str());
  } else {
    std::printf("[FAIL] criterion %2d: %s\n       %s\n", number, label.c_str(),
                detail.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main() {
  criterion(1, "paper verify passes end-to-end (exit 0), all checks exact",
            [](Checker& c) {
              CommandResult r = run_command(kCli + " paper verify");
              c.expect(r.exit_code == 0,
                       "exit code " + std::to_string(r.exit_code));
              c.expect(!contains(r.output, "[FAIL]"), "a fixture check failed");
            });

  criterion(2, "the (r31, r3) example passes Eqs. (1)-(3); the pair is a "
               "non-isomorphic solvable pair",
            [](Checker& c) {
              auto f = catalog::pair_fixture("ex31-pair");
              AxiomReport rep = check_postlie(f.pair, f.prod);
              c.expect(rep.pass(), "axioms fail");
              Fingerprint fg = classify(f.pair.g), fn = classify(f.pair.n);
              c.expect(fg.is_solvable && fn.is_solvable, "not solvable");
              c.expect(!(fg == fn), "fingerprints do not separate the pair");
            });

  criterion(3, "Prop. 4.3: product and bracket tables, isomorphism with "
               "det(f) = -3, sl3 semisimple and complete",
            [](Checker& c) {
              auto f = catalog::prop43();
              c.expect(inner_product_from_map(f.n, f.phi) == f.product,
                       "product table differs");
              InducedAlgebra ind = induced_g(f.n, f.product);
              bool tables = ind.jacobi.ok;
              for (Index i = 0; i < 8 && tables; ++i)
                tables = exact_eq(ind.algebra.ad[static_cast<std::size_t>(i)],
                                  f.induced.ad[static_cast<std::size_t>(i)]);
              c.expect(tables, "bracket table differs");
              c.expect(check_isomorphism(f.f, f.induced, f.target),
                       "f is not an isomorphism");
              c.expect(det(f.f) == Rat(-3), "det(f) != -3");
              Fingerprint fp = classify(f.n);
              c.expect(fp.is_semisimple && sgn(det(killing_form(f.n))) != 0,
                       "sl3 not semisimple");
              c.expect(fp.is_complete, "sl3 not complete");
            });

  criterion(4, "Prop. 4.4: operator, weight-1 identity, bracket table, and "
               "the three r2 ideals",
            [](Checker& c) {
              auto f = catalog::prop44();
              c.expect(exact_eq(rb_from_subalgebra_pair(f.n, f.n1, f.n2), f.phi),
                       "operator differs from phi");
              c.expect(check_rota_baxter(f.n, f.phi, Rat(1)).ok,
                       "weight-1 identity fails");
              InducedAlgebra ind = induced_g(f.n, f.product);
              bool table = ind.jacobi.ok;
              Index nonzero = 0;
              for (Index i = 0; i < 6 && table; ++i) {
                table = exact_eq(ind.algebra.ad[static_cast<std::size_t>(i)],
                                 f.induced.ad[static_cast<std::size_t>(i)]);
                for (Index j = i + 1; j < 6; ++j)
                  if (!is_zero(Mat(ind.algebra.bracket_basis(i, j)))) ++nonzero;
              }
              c.expect(table, "bracket table differs");
              c.expect(nonzero == 4, "expected exactly 4 nonzero brackets");
              Fingerprint r2_fp = classify(catalog::algebra("r2"));
              Subspace acc = Subspace::zero(6);
              for (const Subspace& ideal : f.ideals) {
                c.expect(is_ideal(f.induced, ideal), "component not an ideal");
                c.expect(intersection(acc, ideal).dim() == 0,
                         "components not pairwise direct");
                acc = sum(acc, ideal);
                c.expect(classify(subalgebra_from_span(f.induced, ideal)) == r2_fp,
                         "component fingerprint is not r2");
              }
              c.expect(acc.dim() == 6, "components do not span");
            });

  criterion(5, "Prop. 5.2 at n = 2 and n = 3: axioms pass, n solvable "
               "non-nilpotent, g has 2-dim center and codim-2 derived algebra",
            [](Checker& c) {
              for (Index n : {Index(2), Index(3)}) {
                PairWithProduct pw = prop52_structure(n);
                std::string tag = "n=" + std::to_string(n) + ": ";
                c.expect(check_postlie(pw.pair, pw.prod).pass(),
                         tag + "axioms fail");
                Fingerprint nf = classify(pw.pair.n);
                c.expect(nf.is_solvable && !nf.is_nilpotent,
                         tag + "n not solvable non-nilpotent");
                // invariants recomputed independently of classify
                c.expect(center(pw.pair.g).dim() == 2, tag + "center != 2");
                Subspace derived = derived_subalgebra(pw.pair.g);
                c.expect(derived.dim() == pw.pair.g.dim() - 2,
                         tag + "derived codimension != 2");
              }
            });

  criterion(6, "Remark after Thm. 2.6 at n = 2: spanning sum, 1-dim "
               "intersection, perfect ambient with rad = nil = V(2)",
            [](Checker& c) {
              auto f = catalog::remark26();
              LinearMap phi = exp_ad(f.ambient, f.z);
              Subspace s2 = map_subspace(phi, f.s1);
              SubspacePairInfo info = subspace_ops(f.s1, s2);
              c.expect(info.spans, "s1 + s2 does not span");
              c.expect(info.intersection.dim() == 1,
                       "intersection dimension != 1 = n^2 - n - 1");
              c.expect(classify(f.ambient).is_perfect, "ambient not perfect");
              Subspace v2 = parse_span(f.ambient.basis, "v1, v2");
              c.expect(radical(f.ambient) == v2, "radical != V(2)");
              c.expect(nilradical(f.ambient) == v2, "nilradical != V(2)");
            });

  criterion(7, "Thm. 2.6 sanity: sl2+sl2 = (sl2+0) + diagonal, direct and "
               "spanning, ambient semisimple with the direct-sum fingerprint",
            [](Checker& c) {
              LieAlgebra g = catalog::algebra("sl2-plus-sl2");
              Subspace s1 = parse_span(g.basis, "e1, e2, e3");
              Subspace delta = parse_span(g.basis, "e1+e4, e2+e5, e3+e6");
              LieAlgebra a1 = subalgebra_from_span(g, s1, "part1");
              LieAlgebra a2 = subalgebra_from_span(g, delta, "part2");
              c.expect(classify(a1).is_semisimple && classify(a2).is_semisimple,
                       "parts not semisimple");
              SubspacePairInfo info = subspace_ops(s1, delta);
              c.expect(info.is_direct && info.spans, "sum not direct spanning");
              Fingerprint ambient = classify(g);
              c.expect(ambient.is_semisimple, "ambient not semisimple");
              c.expect(ambient == classify(direct_sum(a1, a2)),
                       "fingerprint mismatch with the direct sum");
            });

  criterion(8, "derivations of r2, r3, r31, n3, n4 map into the nilradical, "
               "which matches the hand-derived table",
            [](Checker& c) {
              struct Row {
                const char* name;
                const char* nil_span;  // empty = full algebra
              };
              for (const Row& row : {Row{"r2", "e2"}, Row{"r3", "e2, e3"},
                                     Row{"r31", "e2, e3"}, Row{"n3", ""},
                                     Row{"n4", ""}}) {
                LieAlgebra g = catalog::algebra(row.name);
                Subspace nil = nilradical(g);
                Subspace expect = std::string(row.nil_span).empty()
                                      ? Subspace::full(g.dim())
                                      : parse_span(g.basis, row.nil_span);
                c.expect(nil == expect,
                         std::string(row.name) + ": nilradical mismatch");
                for (const LinearMap& d : derivation_algebra(g).basis)
                  c.expect(nil.contains(map_subspace(d, Subspace::full(g.dim()))),
                           std::string(row.name) +
                               ": derivation image escapes the nilradical");
              }
            });

  criterion(9, "solver rediscovery through the CLI: (r31, r3) and "
               "(abelian3, n3) at bound 1, deterministic, within budget",
            [](Checker& c) {
              std::string cmd = kCli + " search postlie --g r31 --n r3 --bound 1";
              CommandResult r1 = run_command(cmd);
              c.expect(r1.exit_code == 0, "exit " + std::to_string(r1.exit_code));
              c.expect(r1.seconds < 60.0, "slower than 60 s");
              c.expect(contains(r1.output, "e1.e3 = -e2"),
                       "printed structure missing from the solution set");
              CommandResult r2 = run_command(cmd);
              c.expect(r1.output == r2.output, "output not deterministic");

              CommandResult lr = run_command(
                  kCli + " search postlie --g abelian3 --n n3 --bound 1");
              c.expect(lr.exit_code == 0, "exit " + std::to_string(lr.exit_code));
              c.expect(lr.seconds < 60.0, "slower than 60 s");
              c.expect(contains(lr.output, "e2.e1 = e3"),
                       "LR witness missing from the solution set");
            });

  criterion(10, "nonexistence spot checks at bound 1 return no witness "
                "(proof or exhausted-grid evidence), each under 5 minutes",
            [](Checker& c) {
              struct Run {
                const char* g;
                const char* n;
              };
              for (const Run& run :
                   {Run{"sl2", "r3"}, Run{"sl2", "n3"}, Run{"gl2", "n4"},
                    Run{"gl2", "n3-plus-c"}, Run{"gl2", "r2-plus-r2"}}) {
                std::string cmd = kCli + " report nonexistence --g " + run.g +
                                  " --n " + run.n + " --bound 1";
                CommandResult r = run_command(cmd);
                std::string tag =
                    std::string("(") + run.g + ", " + run.n + "): ";
                c.expect(r.exit_code == 0, tag + "exit " +
                                               std::to_string(r.exit_code));
                c.expect(r.seconds < 300.0, tag + "slower than 5 min");
                c.expect(!contains(r.output, "WITNESS-FOUND"),
                         tag + "witness found where none should exist");
                bool proven = contains(r.output, "PROVEN-EMPTY");
                bool grid = contains(r.output, "GRID-EMPTY");
                c.expect(proven || grid, tag + "no verdict printed");
                if (grid)
                  c.expect(contains(r.output, "not a proof"),
                           tag + "grid emptiness must carry the caveat");
              }
            });

  criterion(11, "property suites: randomized exact linear algebra, axiom "
                "equivalences on fixtures, fingerprint necessity",
            [](Checker& c) {
              std::mt19937 gen(5);
              std::uniform_int_distribution<long> num(-3, 3);
              std::uniform_int_distribution<long> den(1, 2);
              std::uniform_int_distribution<Index> size(1, 5);
              auto rand_mat = [&](Index r, Index cc) {
                Mat m(r, cc);
                for (Index i = 0; i < r; ++i)
                  for (Index j = 0; j < cc; ++j) m(i, j) = rat(num(gen), den(gen));
                return m;
              };
              for (int t = 0; t < 1000; ++t) {
                Mat m = rand_mat(size(gen), size(gen));
                c.expect(rref(m).rank + static_cast<Index>(kernel(m).size()) ==
                             m.cols(),
                         "rank-nullity fails");
                Vec x = rand_mat(m.cols(), 1);
                auto sol = solve_affine(m, Vec(m * x));
                c.expect(sol.has_value() &&
                             exact_eq(Mat(m * sol->particular), Mat(m * x)),
                         "solve-substitution fails");
              }
              LieAlgebra amb = catalog::algebra("sl2-semidirect-v2");
              std::uniform_int_distribution<long> zc(-2, 2);
              for (int t = 0; t < 1000; ++t) {
                Vec z = zero_vec(5);
                z(3) = Rat(zc(gen));
                z(4) = Rat(zc(gen));
                LinearMap phi = exp_ad(amb, z);  // throws unless automorphism
                c.expect(exact_eq(Mat(phi * exp_ad(amb, Vec(-z))), identity(5)),
                         "exp(ad z) inverse identity fails");
              }
              for (const char* name :
                   {"ex31-pair", "lr-n3", "lr-r2", "prop43-pair",
                    "prop44-pair", "gln-prelie(2)", "prop42-pair1",
                    "prop42-pair2", "remark34-pair"}) {
                auto f = catalog::pair_fixture(name);
                AxiomReport rep = check_postlie(f.pair, f.prod);
                bool derivations = true;
                for (Index i = 0; i < f.pair.n.dim(); ++i)
                  derivations = derivations &&
                                is_derivation(f.pair.n,
                                              f.prod.left[static_cast<std::size_t>(i)]);
                c.expect(rep.eq3_ok == derivations,
                         std::string(name) +
                             ": Eq. (3) <-> derivation equivalence fails");
                bool representation = true;
                for (Index i = 0; i < f.pair.g.dim() && representation; ++i)
                  for (Index j = i + 1; j < f.pair.g.dim() && representation;
                       ++j) {
                    Mat lhs = f.prod.left[static_cast<std::size_t>(i)] *
                                  f.prod.left[static_cast<std::size_t>(j)] -
                              f.prod.left[static_cast<std::size_t>(j)] *
                                  f.prod.left[static_cast<std::size_t>(i)];
                    representation = exact_eq(
                        lhs, f.prod.left_mult(f.pair.g.bracket_basis(i, j)));
                  }
                c.expect(rep.eq2_ok == representation,
                         std::string(name) +
                             ": Eq. (2) <-> representation equivalence fails");
              }
              auto p43 = catalog::prop43();
              c.expect(check_isomorphism(p43.f, p43.induced, p43.target) &&
                           classify(p43.induced) == classify(p43.target),
                       "fingerprint necessity fails on the Prop. 4.3 witness");
              LieAlgebra sl2 = catalog::algebra("sl2");
              c.expect(check_isomorphism(identity(3), sl2, sl2) &&
                           classify(sl2) == classify(sl2),
                       "fingerprint necessity fails on the identity witness");
            });

  if (failures == 0) {
    std::printf("all 11 acceptance criteria pass\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
