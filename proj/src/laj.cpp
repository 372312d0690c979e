#include "pla/laj.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "pla/errors.hpp"

namespace pla {

namespace {

using json = nlohmann::ordered_json;

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw ParseError("document is not valid JSON");
  return doc;
}

std::string get_string(const json& doc, const char* key,
                       const std::string& fallback = {}) {
  if (!doc.contains(key)) return fallback;
  if (!doc[key].is_string()) throw ParseError(std::string(key) + " must be a string");
  return doc[key].get<std::string>();
}

Index get_count(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer())
    throw ParseError(std::string(key) + " must be an integer");
  long v = doc[key].get<long>();
  if (v < 0) throw ParseError(std::string(key) + " must be nonnegative");
  return static_cast<Index>(v);
}

std::vector<std::string> get_basis(const json& doc, Index dim) {
  if (!doc.contains("basis") || !doc["basis"].is_array())
    throw ParseError("basis must be an array of labels");
  std::vector<std::string> basis;
  for (const auto& b : doc["basis"]) {
    if (!b.is_string()) throw ParseError("basis labels must be strings");
    basis.push_back(b.get<std::string>());
  }
  if (static_cast<Index>(basis.size()) != dim)
    throw ParseError("dimension mismatch: dim=" + std::to_string(dim) +
                     " but basis has " + std::to_string(basis.size()) +
                     " labels");
  std::set<std::string> seen(basis.begin(), basis.end());
  if (seen.size() != basis.size()) throw ParseError("duplicate basis label");
  return basis;
}

Index basis_index(const std::vector<std::string>& basis,
                  const std::string& label) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == label) return static_cast<Index>(i);
  throw ParseError("unknown basis label '" + label + "'");
}

Vec parse_value(const json& value, const std::vector<std::string>& basis) {
  if (!value.is_object()) throw ParseError("value must map labels to rationals");
  Vec v = zero_vec(static_cast<Index>(basis.size()));
  for (auto it = value.begin(); it != value.end(); ++it) {
    Index k = basis_index(basis, it.key());
    if (!it.value().is_string())
      throw ParseError("rational coefficients must be strings");
    v(k) = parse_rational(it.value().get<std::string>());
  }
  return v;
}

json emit_value(const Vec& v, const std::vector<std::string>& basis) {
  json value = json::object();
  for (Index k = 0; k < v.size(); ++k)
    if (sgn(v(k)) != 0)
      value[basis[static_cast<std::size_t>(k)]] = format_rational(v(k));
  return value;
}

}  // namespace

LieAlgebra parse_algebra(const std::string& text) {
  json doc = parse_json(text);
  if (get_string(doc, "type") != "lie-algebra")
    throw ParseError("expected a lie-algebra document");
  Index dim = get_count(doc, "dim");
  auto basis = get_basis(doc, dim);
  std::vector<BracketEntry> entries;
  std::set<std::pair<Index, Index>> seen;
  if (doc.contains("brackets")) {
    if (!doc["brackets"].is_array()) throw ParseError("brackets must be an array");
    for (const auto& b : doc["brackets"]) {
      Index left = basis_index(basis, get_string(b, "left"));
      Index right = basis_index(basis, get_string(b, "right"));
      if (left >= right)
        throw ParseError("brackets must be stored with left index < right "
                         "index (got " + get_string(b, "left") + ", " +
                         get_string(b, "right") + ")");
      if (!seen.insert({left, right}).second)
        throw ParseError("duplicate bracket entry (" + get_string(b, "left") +
                         ", " + get_string(b, "right") + ")");
      if (!b.contains("value")) throw ParseError("bracket entry without value");
      entries.push_back({left, right, parse_value(b["value"], basis)});
    }
  }
  return make_lie_algebra(get_string(doc, "name", "unnamed"), basis, entries);
}

std::string emit_algebra(const LieAlgebra& g) {
  json doc;
  doc["type"] = "lie-algebra";
  doc["name"] = g.name;
  doc["dim"] = g.dim();
  doc["basis"] = g.basis;
  json brackets = json::array();
  for (Index i = 0; i < g.dim(); ++i)
    for (Index j = i + 1; j < g.dim(); ++j) {
      Vec v = g.bracket_basis(i, j);
      if (is_zero(Mat(v))) continue;
      json entry;
      entry["left"] = g.basis[static_cast<std::size_t>(i)];
      entry["right"] = g.basis[static_cast<std::size_t>(j)];
      entry["value"] = emit_value(v, g.basis);
      brackets.push_back(entry);
    }
  doc["brackets"] = brackets;
  return doc.dump(2) + "\n";
}

ProductDocument parse_product(const std::string& text) {
  json doc = parse_json(text);
  if (get_string(doc, "type") != "product")
    throw ParseError("expected a product document");
  Index dim = get_count(doc, "dim");
  auto basis = get_basis(doc, dim);
  std::vector<ProductEntry> entries;
  std::set<std::pair<Index, Index>> seen;
  if (doc.contains("products")) {
    if (!doc["products"].is_array()) throw ParseError("products must be an array");
    for (const auto& p : doc["products"]) {
      Index left = basis_index(basis, get_string(p, "left"));
      Index right = basis_index(basis, get_string(p, "right"));
      if (!seen.insert({left, right}).second)
        throw ParseError("duplicate product entry (" + get_string(p, "left") +
                         ", " + get_string(p, "right") + ")");
      if (!p.contains("value")) throw ParseError("product entry without value");
      entries.push_back({left, right, parse_value(p["value"], basis)});
    }
  }
  return {get_string(doc, "name", "unnamed"), basis, make_product(dim, entries)};
}

std::string emit_product(const BilinearProduct& prod,
                         const std::vector<std::string>& basis,
                         const std::string& name) {
  json doc;
  doc["type"] = "product";
  doc["name"] = name;
  doc["dim"] = prod.dim;
  doc["basis"] = basis;
  json products = json::array();
  for (Index i = 0; i < prod.dim; ++i)
    for (Index j = 0; j < prod.dim; ++j) {
      Vec v = prod.entry(i, j);
      if (is_zero(Mat(v))) continue;
      json entry;
      entry["left"] = basis[static_cast<std::size_t>(i)];
      entry["right"] = basis[static_cast<std::size_t>(j)];
      entry["value"] = emit_value(v, basis);
      products.push_back(entry);
    }
  doc["products"] = products;
  return doc.dump(2) + "\n";
}

MapDocument parse_map(const std::string& text) {
  json doc = parse_json(text);
  if (get_string(doc, "type") != "linear-map")
    throw ParseError("expected a linear-map document");
  Index rows = get_count(doc, "rows");
  Index cols = get_count(doc, "cols");
  if (!doc.contains("matrix") || !doc["matrix"].is_array())
    throw ParseError("matrix must be an array of rows");
  if (static_cast<Index>(doc["matrix"].size()) != rows)
    throw ParseError("dimension mismatch: expected " + std::to_string(rows) +
                     " rows");
  Mat m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = doc["matrix"][static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError("dimension mismatch: expected " + std::to_string(cols) +
                       " columns");
    for (Index c = 0; c < cols; ++c) {
      const auto& cell = row[static_cast<std::size_t>(c)];
      if (!cell.is_string())
        throw ParseError("matrix entries must be rational strings");
      m(r, c) = parse_rational(cell.get<std::string>());
    }
  }
  return {get_string(doc, "name", "unnamed"), m};
}

std::string emit_map(const LinearMap& m, const std::string& name) {
  json doc;
  doc["type"] = "linear-map";
  doc["name"] = name;
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  json matrix = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(format_rational(m(r, c)));
    matrix.push_back(row);
  }
  doc["matrix"] = matrix;
  return doc.dump(2) + "\n";
}

SupportMask parse_support_mask(const std::string& text,
                               const std::vector<std::string>& basis) {
  json doc = parse_json(text);
  if (get_string(doc, "type") != "support-mask")
    throw ParseError("expected a support-mask document");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw ParseError("entries must be an array");
  SupportMask mask;
  for (const auto& e : doc["entries"]) {
    Index left = basis_index(basis, get_string(e, "left"));
    Index right = basis_index(basis, get_string(e, "right"));
    mask.allowed.push_back({left, right});
  }
  return mask;
}

Vec parse_combination(const std::vector<std::string>& basis,
                      const std::string& text) {
  const Index n = static_cast<Index>(basis.size());
  Vec v = zero_vec(n);
  std::string term;
  std::vector<std::string> terms;
  for (char ch : text) {
    if (ch == '+' || ch == '-') {
      if (!term.empty()) terms.push_back(term);
      term.clear();
      term.push_back(ch);
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      term.push_back(ch);
    }
  }
  if (!term.empty()) terms.push_back(term);
  if (terms.empty()) throw ParseError("empty linear combination");
  for (std::string t : terms) {
    Rat sign = 1;
    if (t[0] == '+' || t[0] == '-') {
      if (t[0] == '-') sign = -1;
      t = t.substr(1);
    }
    if (t.empty()) throw ParseError("dangling sign in combination");
    // Longest basis-name suffix wins, the rest is the coefficient.
    std::size_t best = std::string::npos;
    Index best_index = -1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const std::string& label = basis[i];
      if (t.size() >= label.size() &&
          t.compare(t.size() - label.size(), label.size(), label) == 0) {
        std::size_t cut = t.size() - label.size();
        if (best == std::string::npos || cut < best) {
          best = cut;
          best_index = static_cast<Index>(i);
        }
      }
    }
    if (best == std::string::npos)
      throw ParseError("unknown basis label in combination term '" + t + "'");
    std::string coef = t.substr(0, best);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    Rat value = coef.empty() ? Rat(1) : parse_rational(coef);
    v(best_index) += sign * value;
  }
  return v;
}

Subspace parse_span(const std::vector<std::string>& basis,
                    const std::string& text) {
  std::vector<Vec> rows;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ','))
    if (part.find_first_not_of(" \t") != std::string::npos)
      rows.push_back(parse_combination(basis, part));
  Mat m(static_cast<Index>(rows.size()), static_cast<Index>(basis.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    m.row(static_cast<Index>(i)) = rows[i].transpose();
  return Subspace::from_rows(static_cast<Index>(basis.size()), m);
}

std::string format_combination(const std::vector<std::string>& basis,
                               const Vec& v) {
  std::string out;
  for (Index i = 0; i < v.size(); ++i) {
    if (sgn(v(i)) == 0) continue;
    Rat c = v(i);
    if (out.empty()) {
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += format_rational(c) + "*";
    } else {
      out += sgn(c) > 0 ? " + " : " - ";
      Rat a = abs(c);
      if (a != 1) out += format_rational(a) + "*";
    }
    out += basis[static_cast<std::size_t>(i)];
  }
  return out.empty() ? "0" : out;
}

}  // namespace pla
