#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lalg/linalg.hpp"

#include <random>
#include <vector>

using namespace lalg;

namespace {

ScalarMat from_rows(const std::vector<std::vector<int>>& rows) {
  ScalarMat m(static_cast<int>(rows.size()),
              rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) m.at(i, j) = Scalar(rows[i][j]);
  return m;
}

ScalarMat random_mat(std::mt19937_64& rng, int rows, int cols, int density_pct,
                     bool complex_entries) {
  ScalarMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (static_cast<int>(rng() % 100) >= density_pct) continue;
      Rational re(static_cast<int>(rng() % 19) - 9, 1 + static_cast<int>(rng() % 4));
      Rational im(0);
      if (complex_entries && rng() % 3 == 0)
        im = Rational(static_cast<int>(rng() % 9) - 4);
      m.at(i, j) = Scalar(re, im);
    }
  return m;
}

}  // namespace

TEST_CASE("rref on hand matrices") {
  ScalarMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  Rref r = rref(m);
  CHECK(r.rank == 2);
  REQUIRE(r.pivots.size() == 2);
  CHECK(r.pivots[0] == 0);
  CHECK(r.pivots[1] == 1);
  CHECK(rank_dense(ScalarMat::identity(5)) == 5);
  CHECK(rank_dense(ScalarMat(3, 4)) == 0);
}

TEST_CASE("nullspace and solve") {
  ScalarMat m = from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  ScalarMat ns = nullspace(m);
  CHECK(ns.cols == 1);
  ScalarMat prod = mat_mul(m, ns);
  CHECK(prod.is_zero());

  auto x = solve(from_rows({{2, 0}, {0, 3}}), {Scalar(4), Scalar(9)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == Scalar(2));
  CHECK((*x)[1] == Scalar(3));
  CHECK(!solve(from_rows({{1, 1}, {1, 1}}), {Scalar(0), Scalar(1)}).has_value());
}

TEST_CASE("sparse fraction free rank equals dense rank on hand cases") {
  CHECK(rank_sparse_ff(ScalarMat(0, 0)) == 0);
  CHECK(rank_sparse_ff(ScalarMat(4, 7)) == 0);
  CHECK(rank_sparse_ff(ScalarMat::identity(6)) == 6);

  // rational entries get cleared to Gaussian integers internally
  ScalarMat q(2, 2);
  q.at(0, 0) = Scalar(Rational(1, 2));
  q.at(0, 1) = Scalar(Rational(1, 3));
  q.at(1, 0) = Scalar(Rational(3, 2));
  q.at(1, 1) = Scalar(Rational(1, 1));
  CHECK(rank_sparse_ff(q) == rank_dense(q));

  ScalarMat g(2, 2);
  g.at(0, 0) = Scalar::i();
  g.at(0, 1) = Scalar(1);
  g.at(1, 0) = Scalar(-1);
  g.at(1, 1) = Scalar::i();
  CHECK(rank_dense(g) == 1);
  CHECK(rank_sparse_ff(g) == 1);

  // Hilbert-like matrix, exercises coefficient growth
  ScalarMat h(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) h.at(i, j) = Scalar(Rational(1, i + j + 1));
  CHECK(rank_sparse_ff(h) == 6);
  CHECK(rank_dense(h) == 6);
}

TEST_CASE("sparse fraction free rank equals dense rank on random matrices") {
  std::mt19937_64 rng(20240811);
  for (int t = 0; t < 120; ++t) {
    int rows = 1 + static_cast<int>(rng() % 9);
    int cols = 1 + static_cast<int>(rng() % 9);
    int density = 15 + static_cast<int>(rng() % 80);
    ScalarMat m = random_mat(rng, rows, cols, density, t % 2 == 0);
    CHECK(rank_sparse_ff(m) == rank_dense(m));
  }
  // low rank by construction: outer products
  for (int t = 0; t < 20; ++t) {
    int n = 3 + static_cast<int>(rng() % 5);
    ScalarMat u = random_mat(rng, n, 2, 90, true);
    ScalarMat v = random_mat(rng, 2, n, 90, true);
    ScalarMat m = mat_mul(u, v);
    int rd = rank_dense(m);
    CHECK(rd <= 2);
    CHECK(rank_sparse_ff(m) == rd);
  }
}

TEST_CASE("polynomial fraction free rank") {
  auto ch = Chart::create({{"x"}, {"y"}});
  auto P = [&](const char* s) { return Poly::parse(ch, s); };
  PolyMat full = {{P("x"), P("y")}, {P("y"), P("x")}};
  CHECK(rank_poly_ff(full) == 2);
  PolyMat degenerate = {{P("x"), P("y")}, {P("2*x"), P("2*y")}};
  CHECK(rank_poly_ff(degenerate) == 1);
  PolyMat zero = {{Poly(ch), Poly(ch)}};
  CHECK(rank_poly_ff(zero) == 0);
  // determinant vanishes identically despite nonzero entries
  PolyMat sq = {{P("x*y"), P("x^2")}, {P("y^2"), P("x*y")}};
  CHECK(rank_poly_ff(sq) == 1);
}

TEST_CASE("hcat and identity") {
  ScalarMat a = from_rows({{1, 2}, {3, 4}});
  ScalarMat b = ScalarMat::identity(2);
  ScalarMat c = hcat(a, b);
  CHECK(c.cols == 4);
  Rref r = rref(c);
  CHECK(r.rank == 2);
  // right block of the rref is the inverse
  ScalarMat inv(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) inv.at(i, j) = r.mat.at(i, 2 + j);
  CHECK(mat_mul(a, inv) == ScalarMat::identity(2));
}
