#include "pla/paper_suite.hpp"

#include <functional>
#include <sstream>

#include "pla/catalog.hpp"
#include "pla/errors.hpp"
#include "pla/solver.hpp"

namespace pla {

namespace {

struct Harness {
  std::vector<PaperCheckResult> results;
  unsigned threads = 1;

  void run(const std::string& id, const std::string& anchor,
           const std::string& description,
           const std::function<void(std::ostringstream&)>& body) {
    PaperCheckResult r{id, anchor, description, true, ""};
    std::ostringstream detail;
    try {
      body(detail);
    } catch (const std::exception& e) {
      detail << "exception: " << e.what();
    }
    r.detail = detail.str();
    r.pass = r.detail.empty();
    results.push_back(std::move(r));
  }

  Ansatz default_ansatz() const {
    Ansatz a;
    a.threads = threads;
    return a;
  }
};

void require(std::ostringstream& out, bool cond, const std::string& msg) {
  if (!cond) {
    if (out.tellp() > 0) out << "; ";
    out << msg;
  }
}

bool left_mults_are_derivations(const LieAlgebra& n, const BilinearProduct& p) {
  for (Index i = 0; i < n.dim(); ++i)
    if (!is_derivation(n, p.left[static_cast<std::size_t>(i)])) return false;
  return true;
}

bool left_mult_is_representation(const LiePair& pair, const BilinearProduct& p) {
  const Index d = pair.g.dim();
  for (Index i = 0; i < d; ++i)
    for (Index j = i + 1; j < d; ++j) {
      Mat lhs = p.left[static_cast<std::size_t>(i)] *
                    p.left[static_cast<std::size_t>(j)] -
                p.left[static_cast<std::size_t>(j)] *
                    p.left[static_cast<std::size_t>(i)];
      Mat rhs = p.left_mult(pair.g.bracket_basis(i, j));
      if (!exact_eq(lhs, rhs)) return false;
    }
  return true;
}

const std::vector<std::string>& catalog_algebra_names() {
  static const std::vector<std::string> names = {
      "abelian(1)", "abelian(2)", "abelian(3)", "abelian(4)",
      "r2", "r3", "r31", "n3", "n4", "n3-plus-c", "r2-plus-r2",
      "sl2", "sl3", "gl2", "gl3", "aff1", "aff2",
      "sl2-plus-sl2", "sl3-paper", "aff2-plus-aff1", "sl2-semidirect-v2",
      "prop43-induced-g", "prop44-induced-g"};
  return names;
}

const std::vector<std::string>& catalog_pair_names() {
  static const std::vector<std::string> names = {
      "ex31-pair", "lr-n3", "lr-r2", "gln-prelie(2)",
      "prop43-pair", "prop44-pair", "prop52-fixture(2)", "prop52-fixture(3)",
      "prop42-pair1", "prop42-pair2", "remark34-pair"};
  return names;
}

}  // namespace

std::vector<PaperCheckResult> run_paper_suite(unsigned threads) {
  Harness h;
  h.threads = threads;

  h.run("jacobi-catalog", "§2-§5", "every catalog algebra satisfies Jacobi",
        [&](std::ostringstream& out) {
          for (const auto& name : catalog_algebra_names()) {
            LieAlgebra g = catalog::algebra(name);
            require(out, check_jacobi(g).ok, name + " fails Jacobi");
          }
        });

  h.run("sl3-table", "§4", "the printed sl3 bracket table equals sl3 in the "
                           "E_ij basis",
        [&](std::ostringstream& out) {
          LieAlgebra paper = catalog::algebra("sl3-paper");
          LieAlgebra generic = catalog::sl(3);
          require(out, paper.dim() == generic.dim(), "dimension mismatch");
          for (Index i = 0; i < paper.dim(); ++i)
            require(out, exact_eq(paper.ad[static_cast<std::size_t>(i)],
                                  generic.ad[static_cast<std::size_t>(i)]),
                    "structure constants differ at ad(e" +
                        std::to_string(i + 1) + ")");
        });

  h.run("r3-vs-r31", "§3", "r3 and r31 are solvable with distinct fingerprints",
        [&](std::ostringstream& out) {
          Fingerprint a = classify(catalog::algebra("r3"));
          Fingerprint b = classify(catalog::algebra("r31"));
          require(out, a.is_solvable && b.is_solvable, "not solvable");
          require(out, !a.is_nilpotent && !b.is_nilpotent, "nilpotent");
          require(out, !(a == b), "fingerprints coincide");
          require(out, a.dim_derivations == 4 && b.dim_derivations == 6,
                  "derivation dimensions changed");
        });

  h.run("ex31-postlie", "§3 Example",
        "e1.e3 = -e2 is a post-Lie structure on (r31, r3)",
        [&](std::ostringstream& out) {
          auto f = catalog::pair_fixture("ex31-pair");
          AxiomReport rep = check_postlie(f.pair, f.prod);
          require(out, rep.pass(), "axioms fail");
        });

  h.run("prop43-product-table", "Prop. 4.3",
        "x.y = {phi(x), y} reproduces the printed product table",
        [&](std::ostringstream& out) {
          auto f = catalog::prop43();
          BilinearProduct built = inner_product_from_map(f.n, f.phi);
          require(out, built == f.product, "product table mismatch");
        });

  h.run("prop43-induced-brackets", "Prop. 4.3",
        "the induced g reproduces the printed bracket table",
        [&](std::ostringstream& out) {
          auto f = catalog::prop43();
          InducedAlgebra ind = induced_g(f.n, f.product);
          require(out, ind.jacobi.ok, "induced brackets fail Jacobi");
          for (Index i = 0; i < f.n.dim(); ++i)
            require(out,
                    exact_eq(ind.algebra.ad[static_cast<std::size_t>(i)],
                             f.induced.ad[static_cast<std::size_t>(i)]),
                    "bracket table mismatch at ad(e" + std::to_string(i + 1) +
                        ")");
        });

  h.run("prop43-postlie", "Prop. 4.3",
        "the pair (g, sl3) with the printed product passes Eqs. (1)-(3)",
        [&](std::ostringstream& out) {
          auto f = catalog::pair_fixture("prop43-pair");
          require(out, check_postlie(f.pair, f.prod).pass(), "axioms fail");
        });

  h.run("prop43-isomorphism", "Prop. 4.3",
        "f is an isomorphism g -> aff2 + aff1 with det(f) = -3",
        [&](std::ostringstream& out) {
          auto f = catalog::prop43();
          require(out, check_isomorphism(f.f, f.induced, f.target),
                  "f is not an isomorphism");
          require(out, det(f.f) == Rat(-3),
                  "det(f) = " + format_rational(det(f.f)));
          require(out, classify(f.induced) == classify(f.target),
                  "fingerprints of isomorphic algebras differ");
        });

  h.run("prop43-rota-baxter", "Prop. 4.3",
        "phi is a Rota-Baxter operator of weight 1 on sl3",
        [&](std::ostringstream& out) {
          auto f = catalog::prop43();
          require(out, check_rota_baxter(f.n, f.phi, Rat(1)).ok,
                  "Rota-Baxter identity fails");
        });

  h.run("prop43-classes", "Prop. 4.3 / §4",
        "sl3 is semisimple and complete; aff2 + aff1 is complete",
        [&](std::ostringstream& out) {
          auto f = catalog::prop43();
          Fingerprint n_fp = classify(f.n);
          require(out, n_fp.is_semisimple, "sl3 not semisimple");
          require(out, sgn(det(killing_form(f.n))) != 0,
                  "Killing form of sl3 degenerate");
          require(out, n_fp.is_complete, "sl3 not complete");
          Fingerprint t_fp = classify(f.target);
          require(out, t_fp.is_complete, "aff2 + aff1 not complete");
          require(out, !t_fp.is_semisimple, "aff2 + aff1 is not semisimple");
          require(out, t_fp.is_solvable == false, "aff2 + aff1 solvable");
        });

  h.run("prop44-operator", "Prop. 4.4",
        "R(n1 + n2) = -n2 on sl2 + sl2 equals the printed phi",
        [&](std::ostringstream& out) {
          auto f = catalog::prop44();
          LinearMap r = rb_from_subalgebra_pair(f.n, f.n1, f.n2);
          require(out, exact_eq(r, f.phi), "operator differs from phi");
          require(out, check_rota_baxter(f.n, f.phi, Rat(1)).ok,
                  "phi fails the weight-1 Rota-Baxter identity");
        });

  h.run("prop44-product-table", "Prop. 4.4",
        "x.y = {phi(x), y} reproduces the printed product table",
        [&](std::ostringstream& out) {
          auto f = catalog::prop44();
          require(out, inner_product_from_map(f.n, f.phi) == f.product,
                  "product table mismatch");
        });

  h.run("prop44-induced-brackets", "Prop. 4.4",
        "the induced g has exactly the four printed brackets",
        [&](std::ostringstream& out) {
          auto f = catalog::prop44();
          InducedAlgebra ind = induced_g(f.n, f.product);
          require(out, ind.jacobi.ok, "induced brackets fail Jacobi");
          for (Index i = 0; i < f.n.dim(); ++i)
            require(out,
                    exact_eq(ind.algebra.ad[static_cast<std::size_t>(i)],
                             f.induced.ad[static_cast<std::size_t>(i)]),
                    "bracket table mismatch");
          require(out,
                  check_postlie(make_pair(f.induced, f.n), f.product).pass(),
                  "pair fails the axioms");
        });

  h.run("prop44-ideal-decomposition", "Prop. 4.4",
        "g = <e1,e3> + <e4,e6> + <e2,e3+e5>, three r2 ideals",
        [&](std::ostringstream& out) {
          auto f = catalog::prop44();
          Fingerprint r2_fp = classify(catalog::algebra("r2"));
          Subspace acc = Subspace::zero(6);
          for (std::size_t k = 0; k < f.ideals.size(); ++k) {
            const Subspace& ideal = f.ideals[k];
            require(out, is_ideal(f.induced, ideal),
                    "component " + std::to_string(k + 1) + " is not an ideal");
            require(out, intersection(acc, ideal).dim() == 0,
                    "components overlap");
            acc = sum(acc, ideal);
            Fingerprint fp =
                classify(subalgebra_from_span(f.induced, ideal));
            require(out, fp == r2_fp,
                    "component " + std::to_string(k + 1) +
                        " does not look like r2");
          }
          require(out, acc.dim() == 6, "components do not span");
        });

  h.run("prop44-n-complete", "Prop. 4.4 proof",
        "n = sl2 + sl2 is complete (Rota-Baxter bijection hypothesis)",
        [&](std::ostringstream& out) {
          Fingerprint fp = classify(catalog::algebra("sl2-plus-sl2"));
          require(out, fp.is_complete, "n not complete");
          require(out, fp.is_semisimple, "n not semisimple");
        });

  for (Index n : {Index(2), Index(3)}) {
    std::string id = "prop52-n" + std::to_string(n);
    h.run(id, "Prop. 5.2",
          "post-Lie structure on (gl" + std::to_string(n) + " + C, n) with n "
          "solvable non-nilpotent",
          [&, n](std::ostringstream& out) {
            PairWithProduct pw = prop52_structure(n);
            require(out, check_postlie(pw.pair, pw.prod).pass(), "axioms fail");
            Fingerprint nf = classify(pw.pair.n);
            require(out, nf.is_solvable && !nf.is_nilpotent,
                    "n is not solvable non-nilpotent");
            Fingerprint gf = classify(pw.pair.g);
            require(out, gf.dim_center == 2, "center of g is not 2-dim");
            require(out,
                    gf.derived_series_dims.size() > 1 &&
                        gf.derived_series_dims[1] == gf.dim - 2,
                    "[g,g] does not have codimension 2");
            require(out, is_reductive(pw.pair.g), "g is not reductive");
            InducedAlgebra ind = induced_g(pw.pair.n, pw.prod);
            require(out, ind.jacobi.ok, "induced g fails Jacobi");
            for (Index i = 0; i < pw.pair.g.dim(); ++i)
              require(out,
                      exact_eq(ind.algebra.ad[static_cast<std::size_t>(i)],
                               pw.pair.g.ad[static_cast<std::size_t>(i)]),
                      "induced brackets differ from the declared g");
          });
  }

  h.run("remark26-decomposition", "Remark after Thm. 2.6",
        "sl2 |x V(2) = s1 + exp(ad z)(s1) with dim(s1 cap s2) = 1",
        [&](std::ostringstream& out) {
          auto f = catalog::remark26();
          LinearMap phi = exp_ad(f.ambient, f.z);
          Subspace s2 = map_subspace(phi, f.s1);
          SubspacePairInfo info = subspace_ops(f.s1, s2);
          require(out, info.spans, "s1 + s2 does not span");
          require(out, info.intersection.dim() == 1,
                  "dim(s1 cap s2) = " + std::to_string(info.intersection.dim()));
          require(out, is_subalgebra(f.ambient, s2), "s2 is not a subalgebra");
          Fingerprint fp = classify(f.ambient);
          require(out, fp.is_perfect, "ambient not perfect");
          Subspace v2 = parse_span(f.ambient.basis, "v1, v2");
          require(out, radical(f.ambient) == v2, "radical is not V(2)");
          require(out, nilradical(f.ambient) == v2, "nilradical is not V(2)");
        });

  h.run("thm26-sanity", "Thm. 2.6",
        "sl2 + sl2 as a direct sum of two semisimple subalgebras is "
        "semisimple with the expected fingerprint",
        [&](std::ostringstream& out) {
          LieAlgebra g = catalog::algebra("sl2-plus-sl2");
          Subspace s1 = parse_span(g.basis, "e1, e2, e3");
          Subspace delta = parse_span(g.basis, "e1+e4, e2+e5, e3+e6");
          require(out, is_strongly_disemisimple_decomposition(g, s1, delta),
                  "not a strongly disemisimple decomposition");
          LieAlgebra a1 = subalgebra_from_span(g, s1, "s1");
          LieAlgebra a2 = subalgebra_from_span(g, delta, "diag");
          SubspacePairInfo info = subspace_ops(s1, delta);
          require(out, info.is_direct && info.spans,
                  "sum is not direct and spanning");
          Fingerprint ambient = classify(g);
          require(out, ambient.is_semisimple, "ambient not semisimple");
          require(out, ambient == classify(direct_sum(a1, a2)),
                  "fingerprint differs from the direct sum of the parts");
        });

  h.run("lemma22-disemisimple", "Lemma 2.2",
        "the disemisimple (non-direct) decomposition is perfect with "
        "rad = nil",
        [&](std::ostringstream& out) {
          auto f = catalog::remark26();
          LinearMap phi = exp_ad(f.ambient, f.z);
          Subspace s2 = map_subspace(phi, f.s1);
          require(out, is_disemisimple_decomposition(f.ambient, f.s1, s2),
                  "not a disemisimple decomposition");
          require(out,
                  !is_strongly_disemisimple_decomposition(f.ambient, f.s1, s2),
                  "the sum should not be direct here");
          require(out, classify(f.ambient).is_perfect, "not perfect");
          require(out, radical(f.ambient) == nilradical(f.ambient),
                  "rad != nil");
        });

  h.run("thm41-existence-cells", "Thm. 4.1",
        "each witnessed cell of the existence table has the right classes",
        [&](std::ostringstream& out) {
          // Table conventions: nilpotent means non-abelian, solvable means
          // non-nilpotent, reductive and complete mean non-semisimple. The
          // classes still overlap (a complete algebra may be solvable).
          auto in_class = [](const LieAlgebra& a, const std::string& cls) {
            Fingerprint fp = classify(a);
            if (cls == "abelian") return fp.is_abelian;
            if (cls == "nilpotent") return fp.is_nilpotent && !fp.is_abelian;
            if (cls == "solvable") return fp.is_solvable && !fp.is_nilpotent;
            if (cls == "semisimple") return fp.is_semisimple;
            if (cls == "reductive") return is_reductive(a) && !fp.is_semisimple;
            if (cls == "complete") return fp.is_complete && !fp.is_semisimple;
            return false;
          };
          struct Cell {
            const char* fixture;
            const char* g_class;
            const char* n_class;
          };
          for (const Cell& cell :
               {Cell{"ex31-pair", "solvable", "solvable"},
                Cell{"prop42-pair1", "reductive", "nilpotent"},
                Cell{"prop42-pair2", "reductive", "solvable"},
                Cell{"prop52-fixture(2)", "reductive", "solvable"},
                Cell{"prop43-pair", "complete", "semisimple"},
                Cell{"prop44-pair", "complete", "semisimple"},
                Cell{"remark34-pair", "reductive", "reductive"}}) {
            auto f = catalog::pair_fixture(cell.fixture);
            require(out, check_postlie(f.pair, f.prod).pass(),
                    std::string(cell.fixture) + ": axioms fail");
            require(out, in_class(f.pair.g, cell.g_class),
                    std::string(cell.fixture) + ": g is not in class " +
                        cell.g_class);
            require(out, in_class(f.pair.n, cell.n_class),
                    std::string(cell.fixture) + ": n is not in class " +
                        cell.n_class);
          }
          // the simple member of the complete/simple cell
          require(out, classify(catalog::algebra("sl3-paper")).is_semisimple,
                  "sl3 not semisimple");
          require(out,
                  classify(catalog::algebra("prop44-induced-g")).is_complete,
                  "the three-r2 algebra is not complete");
        });

  h.run("thm51-derivations-into-nilradical", "Thm. 5.1 proof",
        "derivations of r2, r3, r31, n3, n4 map into the nilradical",
        [&](std::ostringstream& out) {
          for (const char* name : {"r2", "r3", "r31", "n3", "n4"}) {
            LieAlgebra g = catalog::algebra(name);
            Subspace nil = nilradical(g);
            for (const LinearMap& d : derivation_algebra(g).basis)
              require(out, nil.contains(map_subspace(d, Subspace::full(g.dim()))),
                      std::string(name) + ": derivation image escapes the nilradical");
          }
        });

  h.run("derivations-preserve-radical", "Thm. 5.1 proof",
        "D(rad) lies in nil for every derivation of every catalog algebra",
        [&](std::ostringstream& out) {
          for (const auto& name : catalog_algebra_names()) {
            LieAlgebra g = catalog::algebra(name);
            Subspace rad = radical(g), nil = nilradical(g);
            require(out, rad.contains(nil), name + ": nil not inside rad");
            require(out, is_ideal(g, rad), name + ": radical is not an ideal");
            for (const LinearMap& d : derivation_algebra(g).basis)
              require(out, nil.contains(map_subspace(d, rad)),
                      name + ": D(rad) escapes nil");
          }
        });

  h.run("nilradical-table", "liealg validation gate",
        "nilradicals match the hand-derived table",
        [&](std::ostringstream& out) {
          auto expect_span = [&](const std::string& name,
                                 const std::string& span_text) {
            LieAlgebra g = catalog::algebra(name);
            Subspace expect = span_text.empty()
                                  ? Subspace::zero(g.dim())
                                  : parse_span(g.basis, span_text);
            require(out, nilradical(g) == expect,
                    name + ": nilradical mismatch");
          };
          expect_span("abelian(3)", "e1, e2, e3");
          expect_span("n3", "e1, e2, e3");
          expect_span("n4", "e1, e2, e3, e4");
          expect_span("r2", "e2");
          expect_span("r3", "e2, e3");
          expect_span("r31", "e2, e3");
          expect_span("gl2", "E11+E22");
          expect_span("sl2-semidirect-v2", "v1, v2");
          expect_span("sl2", "");
          expect_span("sl3", "");
          expect_span("sl2-plus-sl2", "");
        });

  h.run("der-n4-solvable", "Prop. 5.3 proof",
        "Der(n4) is solvable",
        [&](std::ostringstream& out) {
          DerivationAlgebra der = derivation_algebra(catalog::algebra("n4"));
          require(out, classify(der.algebra).is_solvable, "Der(n4) not solvable");
        });

  h.run("pair-fixtures-pass", "§3-§5",
        "every catalog pair fixture passes Eqs. (1)-(3)",
        [&](std::ostringstream& out) {
          for (const auto& name : catalog_pair_names()) {
            auto f = catalog::pair_fixture(name);
            AxiomReport rep = check_postlie(f.pair, f.prod);
            require(out, rep.pass(), name + " fails the axioms");
            require(out, left_mults_are_derivations(f.pair.n, f.prod) == rep.eq3_ok,
                    name + ": Eq. (3) and the derivation test disagree");
            require(out, left_mult_is_representation(f.pair, f.prod) == rep.eq2_ok,
                    name + ": Eq. (2) and the representation test disagree");
            InducedAlgebra ind = induced_g(f.pair.n, f.prod);
            require(out, ind.jacobi.ok, name + ": induced g fails Jacobi");
            for (Index i = 0; i < f.pair.g.dim(); ++i)
              require(out,
                      exact_eq(ind.algebra.ad[static_cast<std::size_t>(i)],
                               f.pair.g.ad[static_cast<std::size_t>(i)]),
                      name + ": induced g differs from the declared g");
          }
        });

  h.run("prop42-classes", "Prop. 4.2 / Thm. 4.1",
        "the Prop. 4.2 pairs witness the (reductive, nilpotent) and "
        "(reductive, solvable) cells",
        [&](std::ostringstream& out) {
          auto p1 = catalog::pair_fixture("prop42-pair1");
          Fingerprint g1 = classify(p1.pair.g), n1 = classify(p1.pair.n);
          require(out, is_reductive(p1.pair.g) && !g1.is_semisimple &&
                          !g1.is_solvable,
                  "pair1 g is not reductive non-semisimple");
          require(out, n1.is_nilpotent && !n1.is_abelian,
                  "pair1 n is not nilpotent non-abelian");
          auto p2 = catalog::pair_fixture("prop42-pair2");
          Fingerprint g2 = classify(p2.pair.g), n2 = classify(p2.pair.n);
          require(out, is_reductive(p2.pair.g) && !g2.is_semisimple &&
                          !g2.is_solvable,
                  "pair2 g is not reductive non-semisimple");
          require(out, n2.is_solvable && !n2.is_nilpotent,
                  "pair2 n is not solvable non-nilpotent");
        });

  h.run("remark34-reductive-pair", "Remark 3.4",
        "a reductive pair with non-isomorphic members admits a structure",
        [&](std::ostringstream& out) {
          auto f = catalog::pair_fixture("remark34-pair");
          require(out, is_reductive(f.pair.g) && is_reductive(f.pair.n),
                  "members are not reductive");
          require(out, !(classify(f.pair.g) == classify(f.pair.n)),
                  "fingerprints coincide");
        });

  h.run("rigidity-consistency", "Thm. 3.3",
        "whenever g is semisimple in a fixture, fingerprints of g and n agree",
        [&](std::ostringstream& out) {
          std::vector<std::pair<LiePair, std::string>> pairs;
          for (const auto& name : catalog_pair_names())
            pairs.push_back({catalog::pair_fixture(name).pair, name});
          LieAlgebra s = catalog::algebra("sl2");
          pairs.push_back({make_pair(s, s), "(sl2, sl2) zero structure"});
          LieAlgebra ss = catalog::algebra("sl2-plus-sl2");
          pairs.push_back({make_pair(ss, ss), "(sl2+sl2, sl2+sl2) zero structure"});
          bool nonvacuous = false;
          for (auto& [pair, name] : pairs) {
            Fingerprint gf = classify(pair.g);
            if (!gf.is_semisimple) continue;
            nonvacuous = true;
            require(out, gf == classify(pair.n),
                    name + ": semisimple g with different n fingerprint");
          }
          require(out, nonvacuous, "no semisimple-g fixture exercised");
        });

  h.run("lemma54-prelie", "Lemma 5.4",
        "x o y = 1/2 {x,y} + x.y is pre-Lie when n is 2-step nilpotent",
        [&](std::ostringstream& out) {
          auto f = catalog::pair_fixture("lr-n3");
          BilinearProduct pre = postlie_to_prelie(f.pair, f.prod);
          require(out, check_prelie(f.pair.g, pre).pass(), "output not pre-Lie");
          const Rat half(1, 2);
          Vec e1e2 = pre.entry(0, 1), e2e1 = pre.entry(1, 0);
          require(out, e1e2(2) == half && e2e1(2) == half,
                  "expected e1 o e2 = e2 o e1 = (1/2) e3");
          bool threw = false;
          try {
            auto p43 = catalog::pair_fixture("prop43-pair");
            postlie_to_prelie(p43.pair, p43.prod);
          } catch (const PreconditionError&) {
            threw = true;
          }
          require(out, threw, "non-2-step n must be rejected");
        });

  h.run("embedding-thm33", "Thm. 3.3 proof",
        "x -> (x, L(x)) embeds g into n |x Der(n) on the fixtures",
        [&](std::ostringstream& out) {
          for (const char* name : {"ex31-pair", "prop44-pair", "lr-n3"}) {
            auto f = catalog::pair_fixture(name);
            EmbeddingResult emb = embedding_into_semidirect(f.pair, f.prod);
            require(out, emb.ok(), std::string(name) + ": embedding fails");
          }
          auto f = catalog::pair_fixture("ex31-pair");
          EmbeddingResult emb = embedding_into_semidirect(f.pair, f.prod);
          require(out, emb.h.dim() == 1,
                  "ex31: expected a single nonzero left multiplication");
        });

  h.run("solver-ex31", "§3 Example",
        "the grid search at bound 1 rediscovers the printed structure",
        [&](std::ostringstream& out) {
          auto f = catalog::pair_fixture("ex31-pair");
          auto space = linear_stage(f.pair);
          require(out, space.has_value(), "linear stage inconsistent");
          if (!space) return;
          SolutionSet set = grid_search(f.pair, *space, h.default_ansatz());
          require(out, set.exhausted, "grid not exhausted");
          bool found = false;
          for (const auto& s : set.solutions)
            if (s.prod == f.prod) found = true;
          require(out, found, "printed product not found");
        });

  h.run("solver-lr-structures", "Prop. 4.2 / [BU34]",
        "the solver re-derives the LR-structure witnesses on n3 and r2",
        [&](std::ostringstream& out) {
          for (const char* name : {"lr-n3", "lr-r2"}) {
            auto f = catalog::pair_fixture(name);
            auto space = linear_stage(f.pair);
            require(out, space.has_value(),
                    std::string(name) + ": linear stage inconsistent");
            if (!space) continue;
            SolutionSet set = grid_search(f.pair, *space, h.default_ansatz());
            bool found = false;
            for (const auto& s : set.solutions)
              if (s.prod == f.prod) found = true;
            require(out, found, std::string(name) + ": witness not rediscovered");
          }
        });

  h.run("solver-prop44-operator", "Prop. 4.4",
        "the masked operator search at bound 1 recovers phi",
        [&](std::ostringstream& out) {
          auto f = catalog::prop44();
          Ansatz a = h.default_ansatz();
          SupportMask mask;
          for (Index r = 0; r < 6; ++r)
            for (Index c = 0; c < 6; ++c)
              if (sgn(f.phi(r, c)) != 0) mask.allowed.push_back({r, c});
          a.support = mask;
          RBSolutionSet set = search_rb(f.n, a);
          bool found = false;
          for (const auto& s : set.solutions)
            if (exact_eq(s.op, f.phi)) found = true;
          require(out, found, "phi not recovered");
        });

  h.run("solver-rb-trivial", "§4 / [BU59]",
        "R = 0 and R = -id are weight-1 Rota-Baxter operators",
        [&](std::ostringstream& out) {
          LieAlgebra n = catalog::algebra("r2");
          RBSolutionSet set = search_rb(n, h.default_ansatz());
          bool zero = false, neg_id = false;
          for (const auto& s : set.solutions) {
            if (is_zero(s.op)) zero = true;
            if (exact_eq(s.op, Mat(-identity(2)))) neg_id = true;
          }
          require(out, zero, "R = 0 missing");
          require(out, neg_id, "R = -id missing");
        });

  struct Forbidden {
    const char* g;
    const char* n;
    const char* anchor;
  };
  for (const Forbidden& fb :
       {Forbidden{"sl2", "r3", "Thm. 3.3"}, Forbidden{"sl2", "n3", "Thm. 3.3"},
        Forbidden{"gl2", "n4", "Prop. 5.3"},
        Forbidden{"gl2", "n3-plus-c", "Prop. 5.3"},
        Forbidden{"gl2", "r2-plus-r2", "Thm. 5.1"}}) {
    std::string id = std::string("nonexistence-") + fb.g + "-" + fb.n;
    h.run(id, fb.anchor,
          std::string("no structure on (") + fb.g + ", " + fb.n +
              ") at bound 1",
          [&, fb](std::ostringstream& out) {
            LiePair pair = make_pair(catalog::algebra(fb.g),
                                     catalog::algebra(fb.n));
            NonexistenceReport rep =
                nonexistence_report(pair, h.default_ansatz());
            require(out, rep.kind != NonexistenceKind::WitnessFound,
                    "witness found, contradicting the paper");
            require(out,
                    rep.kind == NonexistenceKind::ProvenEmpty ||
                        rep.grid_exhausted,
                    "grid not exhausted");
          });
  }

  return h.results;
}

}  // namespace pla
