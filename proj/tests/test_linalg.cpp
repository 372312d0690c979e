#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pla/errors.hpp"
#include "pla/linalg.hpp"

using namespace pla;

namespace {

Mat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  Mat m(static_cast<Index>(rows.size()),
        static_cast<Index>(rows.begin()->size()));
  Index r = 0;
  for (const auto& row : rows) {
    Index c = 0;
    for (long v : row) m(r, c++) = Rat(v);
    ++r;
  }
  return m;
}

struct SmallRng {
  std::mt19937 gen{20240817};
  Rat rational(long lo = -3, long hi = 3) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, 2);
    return rat(num(gen), den(gen));
  }
  Mat matrix(Index rows, Index cols) {
    Mat m(rows, cols);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) m(r, c) = rational();
    return m;
  }
  Index dim(Index lo, Index hi) {
    std::uniform_int_distribution<Index> d(lo, hi);
    return d(gen);
  }
};

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("3/6") == rat(1, 2));
  CHECK(parse_rational("-4/2") == rat(-2));
  CHECK(parse_rational("7") == rat(7));
  CHECK(format_rational(rat(-1, 2)) == "-1/2");
  CHECK(format_rational(rat(5)) == "5");
  CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/-2"), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("nan"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e3"), ParseError);
}

TEST_CASE("rref on the stated examples") {
  Rref id3 = rref(identity(3));
  CHECK(id3.rank == 3);
  CHECK(exact_eq(id3.reduced, identity(3)));

  Rref z = rref(zeros(2, 4));
  CHECK(z.rank == 0);
  CHECK(exact_eq(z.reduced, zeros(2, 4)));

  Rref dep = rref(from_rows({{1, 2}, {2, 4}}));
  CHECK(dep.rank == 1);
  CHECK(exact_eq(dep.reduced, from_rows({{1, 2}, {0, 0}})));

  Mat m = from_rows({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}});
  Rref r = rref(m);
  CHECK(exact_eq(rref(r.reduced).reduced, r.reduced));  // idempotent
}

TEST_CASE("kernel on the stated examples") {
  CHECK(kernel(identity(4)).empty());

  auto z = kernel(zeros(3, 3));
  REQUIRE(z.size() == 3);
  for (Index i = 0; i < 3; ++i) CHECK(z[static_cast<std::size_t>(i)](i) == 1);

  Mat m = from_rows({{1, 1, 0}});
  auto basis = kernel(m);
  REQUIRE(basis.size() == 2);
  for (const Vec& v : basis) CHECK(is_zero(Mat(m * v)));
}

TEST_CASE("solve_affine on the stated examples") {
  auto idsol = solve_affine(identity(3), Vec(from_rows({{1}, {2}, {3}})));
  REQUIRE(idsol.has_value());
  CHECK(exact_eq(Mat(idsol->particular), from_rows({{1}, {2}, {3}})));
  CHECK(idsol->homogeneous.empty());

  auto zsol = solve_affine(zeros(2, 3), zero_vec(2));
  REQUIRE(zsol.has_value());
  CHECK(is_zero(Mat(zsol->particular)));
  CHECK(zsol->homogeneous.size() == 3);

  Mat m = from_rows({{1, 1}});
  Vec b(1);
  b(0) = 2;
  auto sol = solve_affine(m, b);
  REQUIRE(sol.has_value());
  CHECK(exact_eq(Mat(m * sol->particular), Mat(b)));
  REQUIRE(sol->homogeneous.size() == 1);
  CHECK(is_zero(Mat(m * sol->homogeneous[0])));

  // inconsistent system
  Mat bad = from_rows({{1, 1}, {1, 1}});
  Vec rhs(2);
  rhs(0) = 0;
  rhs(1) = 1;
  CHECK_FALSE(solve_affine(bad, rhs).has_value());
}

TEST_CASE("det on the stated examples") {
  CHECK(det(identity(5)) == Rat(1));
  CHECK(det(from_rows({{0, 1}, {1, 0}})) == Rat(-1));
  CHECK(det(from_rows({{2, 0}, {0, 3}})) == Rat(6));
  CHECK(det(zeros(3, 3)) == Rat(0));
  CHECK_THROWS_AS(det(zeros(2, 3)), PreconditionError);
}

TEST_CASE("nilpotency and the finite exponential") {
  Mat upper = zeros(3, 3);
  upper(0, 1) = 1;
  upper(1, 2) = 5;
  CHECK(is_nilpotent_matrix(upper));
  CHECK_FALSE(is_nilpotent_matrix(identity(3)));
  CHECK_THROWS_AS(is_nilpotent_matrix(zeros(2, 3)), PreconditionError);

  CHECK(exact_eq(nilpotent_exp(zeros(4, 4)), identity(4)));

  Mat jordan = zeros(2, 2);
  jordan(0, 1) = 1;
  CHECK(exact_eq(nilpotent_exp(jordan), Mat(identity(2) + jordan)));

  CHECK(exact_eq(Mat(nilpotent_exp(upper) * nilpotent_exp(Mat(-upper))),
                 identity(3)));
  CHECK_THROWS_AS(nilpotent_exp(identity(2)), PreconditionError);
}

TEST_CASE("randomized exact identities, 1000 cases each") {
  SmallRng rng;

  SUBCASE("rank plus nullity equals the column count; rref idempotent") {
    for (int c = 0; c < 1000; ++c) {
      Mat m = rng.matrix(rng.dim(1, 5), rng.dim(1, 5));
      Rref r = rref(m);
      CHECK(r.rank + static_cast<Index>(kernel(m).size()) == m.cols());
      CHECK(exact_eq(rref(r.reduced).reduced, r.reduced));
    }
  }

  SUBCASE("solve_affine solutions substitute back exactly") {
    for (int c = 0; c < 1000; ++c) {
      Index rows = rng.dim(1, 5), cols = rng.dim(1, 5);
      Mat m = rng.matrix(rows, cols);
      Vec x = rng.matrix(cols, 1);
      Vec b = m * x;  // consistent by construction
      auto sol = solve_affine(m, b);
      REQUIRE(sol.has_value());
      CHECK(exact_eq(Mat(m * sol->particular), Mat(b)));
      for (const Vec& h : sol->homogeneous) CHECK(is_zero(Mat(m * h)));
      CHECK(sol->homogeneous.size() + static_cast<std::size_t>(rref(m).rank) ==
            static_cast<std::size_t>(cols));
    }
  }

  SUBCASE("determinant is multiplicative") {
    for (int c = 0; c < 1000; ++c) {
      Index n = rng.dim(1, 4);
      Mat a = rng.matrix(n, n), b = rng.matrix(n, n);
      CHECK(det(Mat(a * b)) == det(a) * det(b));
    }
  }

  SUBCASE("kernel vectors annihilate exactly") {
    for (int c = 0; c < 1000; ++c) {
      Mat m = rng.matrix(rng.dim(1, 4), rng.dim(1, 5));
      for (const Vec& v : kernel(m)) CHECK(is_zero(Mat(m * v)));
    }
  }
}

TEST_CASE("coordinates in row space") {
  Mat span = rref(from_rows({{1, 0, 2}, {0, 1, 1}})).reduced;
  Vec v(3);
  v(0) = 2;
  v(1) = -1;
  v(2) = 3;
  auto coords = coordinates_in_rows(span, v);
  REQUIRE(coords.has_value());
  CHECK(exact_eq(Mat(span.transpose() * *coords), Mat(v)));
  Vec outside(3);
  outside(0) = 0;
  outside(1) = 0;
  outside(2) = 1;
  CHECK_FALSE(coordinates_in_rows(span, outside).has_value());
}
