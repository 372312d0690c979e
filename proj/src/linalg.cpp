#include "pla/linalg.hpp"

#include <cctype>

#include "pla/errors.hpp"

namespace pla {

Rat parse_rational(const std::string& s) {
  auto bad = [&] { return ParseError("malformed rational: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
  auto integer_ok = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  if (!integer_ok(num, true) || !integer_ok(den, false)) throw bad();
  mpz_class p(num), q(den);
  if (q <= 0) throw bad();
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rref rref(const Mat& m) {
  Rref out;
  out.reduced = m;
  Mat& a = out.reduced;
  const Index rows = a.rows(), cols = a.cols();
  Index lead = 0;
  for (Index col = 0; col < cols && lead < rows; ++col) {
    Index piv = -1;
    for (Index r = lead; r < rows; ++r)
      if (sgn(a(r, col)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != lead) a.row(piv).swap(a.row(lead));
    Rat inv = a(lead, col);
    for (Index j = col; j < cols; ++j) a(lead, j) /= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == lead || sgn(a(r, col)) == 0) continue;
      Rat factor = a(r, col);
      for (Index j = col; j < cols; ++j) a(r, j) -= factor * a(lead, j);
    }
    out.pivot_cols.push_back(col);
    ++lead;
  }
  out.rank = static_cast<Index>(out.pivot_cols.size());
  return out;
}

std::vector<Vec> kernel(const Mat& m) {
  const Index cols = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (Index c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec> basis;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec v = zero_vec(cols);
    v(free) = 1;
    for (Index i = 0; i < r.rank; ++i) v(r.pivot_cols[i]) = -r.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const Mat& m, const Vec& b) {
  if (b.size() != m.rows())
    throw PreconditionError("solve_affine: right-hand side length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  aug.leftCols(m.cols()) = m;
  aug.col(m.cols()) = b;
  Rref r = rref(aug);
  // A pivot in the last column marks an inconsistent system.
  for (Index c : r.pivot_cols)
    if (c == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular = zero_vec(m.cols());
  for (Index i = 0; i < r.rank; ++i)
    sol.particular(r.pivot_cols[i]) = r.reduced(i, m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (Index c : r.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Index free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Vec v = zero_vec(m.cols());
    v(free) = 1;
    for (Index i = 0; i < r.rank; ++i) v(r.pivot_cols[i]) = -r.reduced(i, free);
    sol.homogeneous.push_back(std::move(v));
  }
  return sol;
}

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) throw PreconditionError("det: non-square input");
  Mat a = m;
  const Index n = a.rows();
  Rat result = 1;
  for (Index col = 0; col < n; ++col) {
    Index piv = -1;
    for (Index r = col; r < n; ++r)
      if (sgn(a(r, col)) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      result = -result;
    }
    result *= a(col, col);
    Rat inv = a(col, col);
    for (Index r = col + 1; r < n; ++r) {
      if (sgn(a(r, col)) == 0) continue;
      Rat factor = a(r, col) / inv;
      for (Index j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
    }
  }
  return result;
}

bool is_nilpotent_matrix(const Mat& m) {
  if (m.rows() != m.cols())
    throw PreconditionError("is_nilpotent_matrix: non-square input");
  const Index n = m.rows();
  if (n == 0) return true;
  Mat power = m;
  for (Index k = 1; k < n; ++k) {
    if (is_zero(power)) return true;
    power = power * m;
  }
  return is_zero(power);
}

Mat nilpotent_exp(const Mat& m) {
  if (!is_nilpotent_matrix(m))
    throw PreconditionError("nilpotent_exp: matrix is not nilpotent");
  const Index n = m.rows();
  Mat result = identity(n);
  Mat term = identity(n);
  Rat factorial = 1;
  for (Index k = 1; k <= n; ++k) {
    term = term * m;
    if (is_zero(term)) break;
    factorial *= Rat(static_cast<long>(k));
    result += term / factorial;
  }
  return result;
}

std::optional<Vec> coordinates_in_rows(const Mat& span_rows, const Vec& v) {
  if (span_rows.rows() == 0)
    return pla::is_zero(Mat(v)) ? std::optional<Vec>(zero_vec(0)) : std::nullopt;
  auto sol = solve_affine(span_rows.transpose(), v);
  if (!sol) return std::nullopt;
  return sol->particular;
}

}  // namespace pla
