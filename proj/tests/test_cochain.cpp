#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lalg/cochain.hpp"
#include "lalg/models.hpp"
#include "lalg/poisson.hpp"
#include "lalg/probes.hpp"
#include "lalg/representation.hpp"

#include <random>
#include <vector>

using namespace lalg;

namespace {

Cochain random_cochain(const PresPtr& p, int degree, std::mt19937_64& rng) {
  Cochain xi(p, degree);
  for (const auto& t : tuples(p->rank(), degree)) {
    if (rng() % 3 == 0) continue;
    xi.set_term(t, {random_poly(p->chart(), rng, 2)});
  }
  return xi;
}

PresPtr so3_cotangent() {
  auto ch = Chart::affine(3);
  PolyMat m(3, PolyVec(3, Poly(ch)));
  auto put = [&](int i, int j, const char* f) {
    m[i][j] = Poly::parse(ch, f);
    m[j][i] = -m[i][j];
  };
  put(0, 1, "x3");
  put(0, 2, "-x2");
  put(1, 2, "x1");
  return cotangent_algebroid(PoissonBivector::from_matrix(ch, m));
}

}  // namespace

TEST_CASE("differential of a function on the tangent line") {
  PresPtr p = tangent_algebroid(1);
  Cochain f(p, 0);
  f.set_term({}, {Poly::parse(p->chart(), "x^2")});
  Cochain df = cochain_diff(f);
  CHECK(df.degree() == 1);
  CHECK(df.eval_scalar({0}) == Poly::parse(p->chart(), "2*x"));
}

TEST_CASE("differential of the sl2 dual basis") {
  PresPtr p = sl2_point();
  auto one = Poly::constant(p->chart(), Scalar(1));
  Cochain hd(p, 1), ed(p, 1), fd(p, 1);
  hd.set_term({0}, {one});
  ed.set_term({1}, {one});
  fd.set_term({2}, {one});
  // (d xi)(a,b) = -xi({a,b})
  Cochain dh = cochain_diff(hd);
  CHECK(dh.eval_scalar({1, 2}) == -one);
  CHECK(dh.eval_scalar({0, 1}).is_zero());
  CHECK(dh.eval_scalar({0, 2}).is_zero());
  Cochain de = cochain_diff(ed);
  CHECK(de.eval_scalar({0, 1}) == Poly::constant(p->chart(), Scalar(-2)));
  CHECK(de.eval_scalar({1, 2}).is_zero());
  Cochain df = cochain_diff(fd);
  CHECK(df.eval_scalar({0, 2}) == Poly::constant(p->chart(), Scalar(2)));
}

TEST_CASE("koszul sign bookkeeping") {
  PresPtr p = sl2_point();
  auto ch = p->chart();
  Cochain a(p, 2), b(p, 2);
  a.add_signed({1, 0}, 0, Poly::constant(ch, Scalar(5)));
  b.set_term({0, 1}, {Poly::constant(ch, Scalar(-5))});
  CHECK(a == b);
  a.add_signed({2, 2}, 0, Poly::constant(ch, Scalar(1)));  // repeat, dropped
  CHECK(a == b);
  CHECK(b.eval_scalar({1, 0}) == Poly::constant(ch, Scalar(5)));
  CHECK(b.eval_scalar({0, 0}).is_zero());
}

TEST_CASE("wedge is graded commutative and associative") {
  PresPtr p = so3_cotangent();
  std::mt19937_64 rng(321);
  for (int t = 0; t < 10; ++t) {
    Cochain a = random_cochain(p, 1, rng);
    Cochain b = random_cochain(p, 1, rng);
    Cochain c = random_cochain(p, 2, rng);
    // odd degrees anticommute
    Cochain ab = wedge(a, b), ba = wedge(b, a);
    Poly minus_one = Poly::constant(p->chart(), Scalar(-1));
    CHECK(ab == minus_one * ba);
    CHECK(wedge(a, c) == wedge(c, a));
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("differential is a degree one derivation") {
  PresPtr p = so3_cotangent();
  auto ch = p->chart();
  std::mt19937_64 rng(17);
  for (int t = 0; t < 8; ++t) {
    Cochain a = random_cochain(p, 1, rng);
    Cochain b = random_cochain(p, 1, rng);
    Cochain lhs = cochain_diff(wedge(a, b));
    Cochain rhs = wedge(cochain_diff(a), b) -
                  wedge(a, cochain_diff(b));  // (-1)^1 on the second term
    CHECK(lhs == rhs);
  }
  // degree 0 against degree 1
  for (int t = 0; t < 8; ++t) {
    Cochain f(p, 0);
    f.set_term({}, {random_poly(ch, rng, 2)});
    Cochain b = random_cochain(p, 1, rng);
    CHECK(cochain_diff(wedge(f, b)) ==
          wedge(cochain_diff(f), b) + wedge(f, cochain_diff(b)));
  }
}

TEST_CASE("differential squares to zero on random cochains") {
  std::mt19937_64 rng(20240816);
  std::vector<PresPtr> fixtures = {tangent_algebroid(2), sl2_point(),
                                   heisenberg3_point(), abelian_point(2),
                                   so3_cotangent(), foliation_algebroid(1, 2).pres};
  for (const auto& p : fixtures) {
    for (int deg = 0; deg < p->rank(); ++deg) {
      for (int t = 0; t < 5; ++t) {
        Cochain xi = random_cochain(p, deg, rng);
        CHECK(cochain_diff(cochain_diff(xi)).is_zero());
      }
    }
  }
}

TEST_CASE("evaluation on sections is multilinear and alternating") {
  PresPtr p = so3_cotangent();
  auto ch = p->chart();
  std::mt19937_64 rng(88);
  for (int t = 0; t < 6; ++t) {
    Cochain xi = random_cochain(p, 2, rng);
    Section u = random_section(p, rng);
    Section v = random_section(p, rng);
    Poly f = random_poly(ch, rng, 2);
    CHECK(xi.eval_on_sections({u, v})[0] == -xi.eval_on_sections({v, u})[0]);
    CHECK(xi.eval_on_sections({u, u})[0].is_zero());
    CHECK(xi.eval_on_sections({f * u, v})[0] == f * xi.eval_on_sections({u, v})[0]);
  }
}

TEST_CASE("trivial twist reproduces the scalar differential") {
  PresPtr p = so3_cotangent();
  Representation triv = Representation::trivial(p);
  std::mt19937_64 rng(5);
  for (int deg = 0; deg < 3; ++deg) {
    Cochain xi = random_cochain(p, deg, rng);
    CHECK(twisted_diff(triv, xi) == cochain_diff(xi));
  }
}
