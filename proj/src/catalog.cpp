#include "pla/catalog.hpp"

#include <functional>
#include <map>

#include "pla/errors.hpp"

namespace {
struct EmbeddedFile {
  const char* name;
  const char* content;
};
#include "embedded_data.inc"
}  // namespace

namespace pla::catalog {

std::vector<std::string> embedded_names() {
  std::vector<std::string> names;
  for (const auto& f : kEmbeddedFiles) names.push_back(f.name);
  return names;
}

std::string embedded_document(const std::string& filename) {
  for (const auto& f : kEmbeddedFiles)
    if (filename == f.name) return f.content;
  throw PreconditionError("unknown data document '" + filename + "'");
}

namespace {

Vec unit(Index dim, Index i) {
  Vec v = zero_vec(dim);
  v(i) = 1;
  return v;
}

Vec combo(Index dim, std::initializer_list<std::pair<Index, long>> terms) {
  Vec v = zero_vec(dim);
  for (auto [i, c] : terms) v(i) += Rat(c);
  return v;
}

std::vector<std::string> e_names(Index n) {
  std::vector<std::string> names;
  for (Index i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

// Parses "family(k)" or "familyK".
bool match_family(const std::string& name, const std::string& family,
                  Index& param) {
  if (name.rfind(family, 0) != 0) return false;
  std::string rest = name.substr(family.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')')
    rest = rest.substr(1, rest.size() - 2);
  if (rest.empty()) return false;
  for (char c : rest)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  param = static_cast<Index>(std::stol(rest));
  return true;
}

}  // namespace

LieAlgebra abelian(Index n) { return abelian_algebra(n); }

LieAlgebra gl(Index n) {
  const Index dim = n * n;
  auto idx = [n](Index a, Index b) { return a * n + b; };
  std::vector<std::string> names;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      names.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1));
  std::vector<BracketEntry> entries;
  for (Index i = 0; i < dim; ++i)
    for (Index j = i + 1; j < dim; ++j) {
      Index a = i / n, b = i % n, c = j / n, d = j % n;
      Vec v = zero_vec(dim);
      if (b == c) v(idx(a, d)) += 1;
      if (d == a) v(idx(c, b)) -= 1;
      if (!is_zero(Mat(v))) entries.push_back({i, j, v});
    }
  return make_lie_algebra("gl" + std::to_string(n), names, entries);
}

LieAlgebra sl(Index n) {
  // Off-diagonal E_ab in row-major order, then h_i = E_ii - E_{i+1,i+1};
  // for n = 3 this is exactly the sl3-paper fixture basis (e1, ..., e8).
  const Index dim = n * n - 1;
  std::vector<std::pair<Index, Index>> offdiag;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b) offdiag.push_back({a, b});
  const Index k = static_cast<Index>(offdiag.size());

  // Work with diagonal coordinates: an element is a matrix; basis vector
  // i < k is E_{offdiag[i]}, basis vector k + i is h_i.
  auto to_matrix = [&](Index basis_index) {
    Mat m = zeros(n, n);
    if (basis_index < k) {
      m(offdiag[static_cast<std::size_t>(basis_index)].first,
        offdiag[static_cast<std::size_t>(basis_index)].second) = 1;
    } else {
      Index i = basis_index - k;
      m(i, i) = 1;
      m(i + 1, i + 1) = -1;
    }
    return m;
  };
  auto to_coords = [&](const Mat& m) {
    Vec v = zero_vec(dim);
    for (Index i = 0; i < k; ++i)
      v(i) = m(offdiag[static_cast<std::size_t>(i)].first,
               offdiag[static_cast<std::size_t>(i)].second);
    // Diagonal (trace zero) in the h basis: coefficient of h_i is the
    // partial sum m_11 + ... + m_ii.
    Rat acc = 0;
    for (Index i = 0; i + 1 < n; ++i) {
      acc += m(i, i);
      v(k + i) = acc;
    }
    return v;
  };

  std::vector<BracketEntry> entries;
  for (Index i = 0; i < dim; ++i)
    for (Index j = i + 1; j < dim; ++j) {
      Mat a = to_matrix(i), b = to_matrix(j);
      Vec v = to_coords(a * b - b * a);
      if (!is_zero(Mat(v))) entries.push_back({i, j, v});
    }
  return make_lie_algebra("sl" + std::to_string(n), e_names(dim), entries);
}

LieAlgebra aff(Index n) {
  LieAlgebra g = gl(n);
  std::vector<std::string> tnames;
  for (Index i = 0; i < n; ++i) tnames.push_back("t" + std::to_string(i + 1));
  LieAlgebra trans = make_lie_algebra("C" + std::to_string(n), tnames, {});
  std::vector<LinearMap> action;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      Mat m = zeros(n, n);
      m(a, b) = 1;
      action.push_back(m);
    }
  return semidirect(g, trans, action, "aff" + std::to_string(n));
}

namespace {

LieAlgebra r2() {
  return make_lie_algebra("r2", e_names(2), {{0, 1, unit(2, 1)}});
}

LieAlgebra r3() {
  return make_lie_algebra("r3", e_names(3),
                          {{0, 1, unit(3, 1)}, {0, 2, combo(3, {{1, 1}, {2, 1}})}});
}

LieAlgebra r31() {
  return make_lie_algebra("r31", e_names(3),
                          {{0, 1, unit(3, 1)}, {0, 2, unit(3, 2)}});
}

LieAlgebra n3() {
  return make_lie_algebra("n3", e_names(3), {{0, 1, unit(3, 2)}});
}

LieAlgebra n4() {
  return make_lie_algebra("n4", e_names(4),
                          {{0, 1, unit(4, 2)}, {0, 2, unit(4, 3)}});
}

LieAlgebra n3_plus_c() {
  return make_lie_algebra("n3-plus-c", e_names(4), {{0, 1, unit(4, 2)}});
}

LieAlgebra r2_plus_r2() {
  return make_lie_algebra("r2-plus-r2", e_names(4),
                          {{0, 1, unit(4, 1)}, {2, 3, unit(4, 3)}});
}

LieAlgebra sl2_semidirect_v2() {
  LieAlgebra s = sl(2);
  LieAlgebra v = make_lie_algebra("V2", {"v1", "v2"}, {});
  Mat e12 = zeros(2, 2), e21 = zeros(2, 2), h = zeros(2, 2);
  e12(0, 1) = 1;
  e21(1, 0) = 1;
  h(0, 0) = 1;
  h(1, 1) = -1;
  return semidirect(s, v, {e12, e21, h}, "sl2|xV2");
}

LieAlgebra from_data(const std::string& file) {
  return parse_algebra(embedded_document(file));
}

const std::map<std::string, std::function<LieAlgebra()>>& named_algebras() {
  static const std::map<std::string, std::function<LieAlgebra()>> table = {
      {"r2", r2},
      {"r3", r3},
      {"r31", r31},
      {"n3", n3},
      {"n4", n4},
      {"heisenberg", n3},
      {"n3-plus-c", n3_plus_c},
      {"r2-plus-r2", r2_plus_r2},
      {"sl2-plus-sl2", [] { return from_data("sl2-plus-sl2.laj"); }},
      {"sl3-paper", [] { return from_data("sl3-paper.laj"); }},
      {"aff2-plus-aff1", [] { return from_data("aff2-plus-aff1.laj"); }},
      {"prop43-induced-g", [] { return from_data("prop43-induced-g.laj"); }},
      {"prop44-induced-g", [] { return from_data("prop44-induced-g.laj"); }},
      {"sl2-semidirect-v2", sl2_semidirect_v2},
  };
  return table;
}

BilinearProduct matrix_product_prelie(Index n) {
  const Index dim = n * n;
  BilinearProduct p = BilinearProduct::zero(dim);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index d = 0; d < n; ++d) {
        Vec v = zero_vec(dim);
        v(a * n + d) = 1;
        p.set_entry(a * n + b, b * n + d, v);
      }
  return p;
}

PairFixture ex31_pair() {
  PairFixture f;
  f.name = "ex31-pair";
  f.provenance = "§3 Example";
  f.pair = make_pair(r31(), r3());
  f.prod = parse_product(embedded_document("ex31-product.lajp")).prod;
  return f;
}

PairFixture lr_n3() {
  PairFixture f;
  f.name = "lr-n3";
  f.provenance = "Prop. 4.2 ingredient (LR-structure cited from [BU34]; "
                 "witness re-derived by the solver)";
  LieAlgebra nn = n3();
  f.pair = make_pair(abelian_algebra(3, "abelian3"), nn);
  BilinearProduct p = BilinearProduct::zero(3);
  p.set_entry(1, 0, unit(3, 2));  // e2 . e1 = e3
  f.prod = p;
  return f;
}

PairFixture lr_r2() {
  PairFixture f;
  f.name = "lr-r2";
  f.provenance = "Prop. 4.2 ingredient (LR-structure cited from [BU34]; "
                 "witness re-derived by the solver)";
  f.pair = make_pair(abelian_algebra(2, "abelian2"), r2());
  BilinearProduct p = BilinearProduct::zero(2);
  p.set_entry(0, 1, combo(2, {{1, -1}}));  // e1 . e2 = -e2
  f.prod = p;
  return f;
}

PairFixture gln_prelie(Index n) {
  PairFixture f;
  f.name = "gln-prelie(" + std::to_string(n) + ")";
  f.provenance = "Remark 3.4 / Prop. 5.2 ingredient (pre-Lie structure on "
                 "gl_n; the associative matrix product)";
  LieAlgebra g = gl(n);
  LieAlgebra ab = make_lie_algebra("C" + std::to_string(n * n), g.basis, {});
  f.pair = make_pair(std::move(g), std::move(ab));
  f.prod = matrix_product_prelie(n);
  return f;
}

PairFixture prop43_pair() {
  PairFixture f;
  f.name = "prop43-pair";
  f.provenance = "Prop. 4.3";
  f.pair = make_pair(from_data("prop43-induced-g.laj"), from_data("sl3-paper.laj"));
  f.prod = parse_product(embedded_document("prop43-product.lajp")).prod;
  return f;
}

PairFixture prop44_pair() {
  PairFixture f;
  f.name = "prop44-pair";
  f.provenance = "Prop. 4.4";
  f.pair = make_pair(from_data("prop44-induced-g.laj"), from_data("sl2-plus-sl2.laj"));
  f.prod = parse_product(embedded_document("prop44-product.lajp")).prod;
  return f;
}

PairFixture prop52_pair(Index n) {
  PairWithProduct pw = prop52_structure(n);
  PairFixture f;
  f.name = "prop52-fixture(" + std::to_string(n) + ")";
  f.provenance = "Prop. 5.2";
  f.pair = std::move(pw.pair);
  f.prod = std::move(pw.prod);
  return f;
}

PairFixture prop42_pair1() {
  PairFixture a = gln_prelie(2), b = lr_n3();
  PairWithProduct pw = direct_sum_products(a.pair, a.prod, b.pair, b.prod);
  PairFixture f;
  f.name = "prop42-pair1";
  f.provenance = "Prop. 4.2, pair (sl2+C^4, C^4+n3)";
  f.pair = std::move(pw.pair);
  f.prod = std::move(pw.prod);
  return f;
}

PairFixture prop42_pair2() {
  PairFixture a = gln_prelie(2), b = lr_r2();
  PairWithProduct pw = direct_sum_products(a.pair, a.prod, b.pair, b.prod);
  PairFixture f;
  f.name = "prop42-pair2";
  f.provenance = "Prop. 4.2, pair (sl2+C^3, C^4+r2)";
  f.pair = std::move(pw.pair);
  f.prod = std::move(pw.prod);
  return f;
}

PairFixture remark34_pair() {
  LieAlgebra s = sl(2);
  LiePair zero_pair = make_pair(s, s);
  BilinearProduct zero_prod = BilinearProduct::zero(3);
  PairFixture b = gln_prelie(2);
  PairWithProduct pw =
      direct_sum_products(zero_pair, zero_prod, b.pair, b.prod);
  PairFixture f;
  f.name = "remark34-pair";
  f.provenance = "Remark 3.4, pair (sl2+gl2, sl2+C^4)";
  f.pair = std::move(pw.pair);
  f.prod = std::move(pw.prod);
  return f;
}

const std::map<std::string, std::function<PairFixture()>>& pair_fixtures() {
  static const std::map<std::string, std::function<PairFixture()>> table = {
      {"ex31-pair", ex31_pair},
      {"lr-n3", lr_n3},
      {"lr-r2", lr_r2},
      {"prop43-pair", prop43_pair},
      {"prop44-pair", prop44_pair},
      {"prop42-pair1", prop42_pair1},
      {"prop42-pair2", prop42_pair2},
      {"remark34-pair", remark34_pair},
  };
  return table;
}

}  // namespace

bool has_algebra(const std::string& name) {
  if (named_algebras().count(name)) return true;
  Index k;
  return match_family(name, "abelian", k) || match_family(name, "gl", k) ||
         match_family(name, "sl", k) || match_family(name, "aff", k);
}

LieAlgebra algebra(const std::string& name) {
  auto it = named_algebras().find(name);
  if (it != named_algebras().end()) return it->second();
  Index k;
  if (match_family(name, "abelian", k)) return abelian(k);
  if (match_family(name, "gl", k)) return gl(k);
  if (match_family(name, "sl", k)) return sl(k);
  if (match_family(name, "aff", k)) return aff(k);
  throw PreconditionError("unknown catalog name '" + name + "'");
}

bool has_pair(const std::string& name) {
  if (pair_fixtures().count(name)) return true;
  Index k;
  return match_family(name, "prop52-fixture", k) ||
         match_family(name, "gln-prelie", k);
}

PairFixture pair_fixture(const std::string& name) {
  auto it = pair_fixtures().find(name);
  if (it != pair_fixtures().end()) return it->second();
  Index k;
  if (match_family(name, "prop52-fixture", k)) return prop52_pair(k);
  if (match_family(name, "gln-prelie", k)) return gln_prelie(k);
  throw PreconditionError("unknown catalog name '" + name + "'");
}

Prop43Fixture prop43() {
  Prop43Fixture f;
  f.n = algebra("sl3-paper");
  f.phi = parse_map(embedded_document("prop43-phi.lajm")).matrix;
  f.product = parse_product(embedded_document("prop43-product.lajp")).prod;
  f.induced = algebra("prop43-induced-g");
  f.f = parse_map(embedded_document("prop43-f.lajm")).matrix;
  f.target = algebra("aff2-plus-aff1");
  return f;
}

Prop44Fixture prop44() {
  Prop44Fixture f;
  f.n = algebra("sl2-plus-sl2");
  f.n1 = parse_span(f.n.basis, "e1, e3, e4, e6");
  f.n2 = parse_span(f.n.basis, "e2, e3+e5");
  f.phi = parse_map(embedded_document("prop44-phi.lajm")).matrix;
  f.product = parse_product(embedded_document("prop44-product.lajp")).prod;
  f.induced = algebra("prop44-induced-g");
  f.ideals = {parse_span(f.n.basis, "e1, e3"), parse_span(f.n.basis, "e4, e6"),
              parse_span(f.n.basis, "e2, e3+e5")};
  return f;
}

Remark26Fixture remark26() {
  Remark26Fixture f;
  f.ambient = algebra("sl2-semidirect-v2");
  f.z = parse_combination(f.ambient.basis, "v1");
  f.s1 = parse_span(f.ambient.basis, "e1, e2, e3");
  return f;
}

std::vector<EntryInfo> list() {
  std::vector<EntryInfo> out;
  auto add = [&](std::string n, std::string k, std::string p) {
    out.push_back({std::move(n), std::move(k), std::move(p)});
  };
  add("abelian(k)", "algebra", "generic family");
  add("gl(n)", "algebra", "generic family; basis E_ab");
  add("sl(n)", "algebra", "generic family; §4 basis for n = 3");
  add("aff(n)", "algebra", "§4, gl_n acting on C^n; simply complete");
  add("r2", "algebra", "§4, 2-dim non-abelian");
  add("r3", "algebra", "§3, {e1,e2}=e2, {e1,e3}=e2+e3");
  add("r31", "algebra", "§3, [e1,e2]=e2, [e1,e3]=e3");
  add("n3", "algebra", "Heisenberg");
  add("n4", "algebra", "Prop. 5.3, standard graded filiform");
  add("n3-plus-c", "algebra", "Prop. 5.3");
  add("r2-plus-r2", "algebra", "Thm. 5.1 spot check");
  add("sl2-plus-sl2", "algebra", "§4, basis e1..e6");
  add("sl3-paper", "algebra", "§4, basis e1..e8 with 21-bracket table");
  add("aff2-plus-aff1", "algebra", "§4, basis f1..f8");
  add("sl2-semidirect-v2", "algebra", "Remark after Thm. 2.6");
  add("remark26-fixture", "fixture",
      "Remark after Thm. 2.6; z = v1 (any nonzero z in V(2) works, the stabilizer is 1-dim)");
  add("prop43-induced-g", "algebra", "Prop. 4.3 bracket table");
  add("prop44-induced-g", "algebra", "Prop. 4.4 bracket table");
  add("ex31-pair", "pair", "§3 Example");
  add("lr-n3", "pair", "Prop. 4.2 ingredient");
  add("lr-r2", "pair", "Prop. 4.2 ingredient");
  add("gln-prelie(n)", "pair", "Remark 3.4 ingredient");
  add("prop43-pair", "pair", "Prop. 4.3");
  add("prop44-pair", "pair", "Prop. 4.4");
  add("prop52-fixture(n)", "pair", "Prop. 5.2");
  add("prop42-pair1", "pair", "Prop. 4.2");
  add("prop42-pair2", "pair", "Prop. 4.2");
  add("remark34-pair", "pair", "Remark 3.4");
  add("prop43-fixture", "fixture", "Prop. 4.3 (phi, product, brackets, f)");
  add("prop44-fixture", "fixture", "Prop. 4.4 (spans, phi, product, ideals)");
  return out;
}

std::vector<std::pair<std::string, std::string>> emit_documents(
    const std::string& name) {
  std::vector<std::pair<std::string, std::string>> docs;
  if (name == "prop43-fixture") {
    Prop43Fixture f = prop43();
    docs.push_back({"sl3-paper.laj", emit_algebra(f.n)});
    docs.push_back({"prop43-phi.lajm", emit_map(f.phi, "prop43-phi")});
    docs.push_back(
        {"prop43-product.lajp", emit_product(f.product, f.n.basis, "prop43-product")});
    docs.push_back({"prop43-induced-g.laj", emit_algebra(f.induced)});
    docs.push_back({"prop43-f.lajm", emit_map(f.f, "prop43-f")});
    docs.push_back({"aff2-plus-aff1.laj", emit_algebra(f.target)});
    return docs;
  }
  if (name == "prop44-fixture") {
    Prop44Fixture f = prop44();
    docs.push_back({"sl2-plus-sl2.laj", emit_algebra(f.n)});
    docs.push_back({"prop44-phi.lajm", emit_map(f.phi, "prop44-phi")});
    docs.push_back(
        {"prop44-product.lajp", emit_product(f.product, f.n.basis, "prop44-product")});
    docs.push_back({"prop44-induced-g.laj", emit_algebra(f.induced)});
    return docs;
  }
  if (name == "remark26-fixture") {
    Remark26Fixture f = remark26();
    docs.push_back({"sl2-semidirect-v2.laj", emit_algebra(f.ambient)});
    return docs;
  }
  if (has_pair(name)) {
    PairFixture f = pair_fixture(name);
    docs.push_back({name + "-g.laj", emit_algebra(f.pair.g)});
    docs.push_back({name + "-n.laj", emit_algebra(f.pair.n)});
    docs.push_back({name + "-product.lajp",
                    emit_product(f.prod, f.pair.n.basis, name + "-product")});
    return docs;
  }
  if (has_algebra(name)) {
    docs.push_back({name + ".laj", emit_algebra(algebra(name))});
    return docs;
  }
  throw PreconditionError("unknown catalog name '" + name + "'");
}

}  // namespace pla::catalog
