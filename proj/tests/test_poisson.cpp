#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lalg/errors.hpp"
#include "lalg/homology.hpp"
#include "lalg/models.hpp"
#include "lalg/poisson.hpp"
#include "lalg/probes.hpp"

#include <random>
#include <vector>

using namespace lalg;

namespace {

Multivector rnd_mv(const ChartPtr& ch, int deg, std::mt19937_64& rng) {
  Multivector u(ch, deg);
  for (const auto& t : tuples(ch->size(), deg)) {
    if (rng() % 3 == 0) continue;
    u += Multivector::term(ch, t, random_poly(ch, rng, 2));
  }
  return u;
}

void skew_set(PolyMat& m, int i, int j, Poly f) {
  m[j][i] = Scalar(-1) * f;
  m[i][j] = std::move(f);
}

PoissonBivector so3_bivector() {
  auto ch = Chart::affine(3);
  PolyMat m(3, PolyVec(3, Poly(ch)));
  skew_set(m, 0, 1, Poly::parse(ch, "x3"));
  skew_set(m, 0, 2, Poly::parse(ch, "-x2"));
  skew_set(m, 1, 2, Poly::parse(ch, "x1"));
  return PoissonBivector::from_matrix(ch, m);
}

PoissonBivector plane_bivector(const ChartPtr& ch) {
  PolyMat m(ch->size(), PolyVec(ch->size(), Poly(ch)));
  skew_set(m, 0, 1, Poly::constant(ch, Scalar(1)));
  return PoissonBivector::from_matrix(ch, m);
}

ScalarMat scale_mat(ScalarMat m, int sign) {
  if (sign < 0)
    for (auto& x : m.a) x = Scalar(-1) * x;
  return m;
}

ChartPtr two_pairs_chart() {
  return Chart::create({{"z"}, {"w"}, {"zb"}, {"wb"}}, {{"z", "zb"}, {"w", "wb"}});
}

PoissonBivector holo_bivector(const ChartPtr& ch, const std::string& coeff) {
  PolyMat m(4, PolyVec(4, Poly(ch)));
  skew_set(m, 0, 1, Poly::parse(ch, coeff));
  return PoissonBivector::from_matrix(ch, m);
}

}  // namespace

TEST_CASE("schouten bracket extends derivative and commutator") {
  auto ch = Chart::affine(2);
  Multivector X = Multivector::term(ch, {0}, Poly::constant(ch, Scalar(1)));
  Poly f = Poly::parse(ch, "x1^2*x2");
  CHECK(schouten(X, Multivector::function(f)) ==
        Multivector::function(f.pderiv(0)));
  // [x2 d1, x1 d2] = x2 d2 - x1 d1
  Multivector A = Multivector::term(ch, {0}, Poly::parse(ch, "x2"));
  Multivector B = Multivector::term(ch, {1}, Poly::parse(ch, "x1"));
  Multivector expected = Multivector::term(ch, {1}, Poly::parse(ch, "x2")) -
                         Multivector::term(ch, {0}, Poly::parse(ch, "x1"));
  CHECK(schouten(A, B) == expected);
}

TEST_CASE("schouten bracket graded identities") {
  auto ch = Chart::affine(3);
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 40; ++trial) {
    int p = rng() % 3, q = rng() % 3, r = 1 + rng() % 2;
    Multivector u = rnd_mv(ch, p, rng);
    Multivector v = rnd_mv(ch, q, rng);
    Multivector w = rnd_mv(ch, r, rng);
    int s = (p * q + p + q) % 2 ? -1 : 1;
    CHECK((schouten(u, v) - Scalar(s) * schouten(v, u)).is_zero());
    int ls = ((p - 1) * q) % 2 ? -1 : 1;
    CHECK((schouten(u, wedge(v, w)) - wedge(schouten(u, v), w) -
           Scalar(ls) * wedge(v, schouten(u, w)))
              .is_zero());
    auto jsgn = [](int a, int b) { return ((a - 1) * (b - 1)) % 2 ? -1 : 1; };
    Multivector jac = Scalar(jsgn(p, r)) * schouten(u, schouten(v, w)) +
                      Scalar(jsgn(q, p)) * schouten(v, schouten(w, u)) +
                      Scalar(jsgn(r, q)) * schouten(w, schouten(u, v));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("scalar multiples preserve the monomial structure") {
  // regression: scaling must not collapse distinct monomials
  auto ch = Chart::affine(2);
  Multivector u = Multivector::term(ch, {0, 1}, Poly::parse(ch, "x1 + x2 + 1"));
  Multivector two = Scalar(2) * u;
  CHECK(two.coeff({0, 1}) == Poly::parse(ch, "2*x1 + 2*x2 + 2"));
  CHECK((u - u).is_zero());
  Multivector v = Multivector::term(ch, {0}, Poly::parse(ch, "x1^2 - 3"));
  CHECK((Scalar(-1) * v).coeff({0}) == Poly::parse(ch, "3 - x1^2"));
}

TEST_CASE("jacobi check accepts and rejects") {
  CHECK(jacobi_check(so3_bivector()).ok);
  CHECK(jacobi_check(plane_bivector(Chart::affine(2))).ok);

  auto ch = Chart::affine(3);
  PolyMat m(3, PolyVec(3, Poly(ch)));
  skew_set(m, 0, 1, Poly::constant(ch, Scalar(1)));
  skew_set(m, 0, 2, Poly::parse(ch, "x1"));
  JacobiReport r = jacobi_check(PoissonBivector::from_matrix(ch, m));
  CHECK(!r.ok);
  CHECK(!r.witness.is_zero());
  CHECK(r.witness.degree() == 3);
}

TEST_CASE("bivector matrix round trip and validation") {
  PoissonBivector p = so3_bivector();
  PolyMat m = p.matrix();
  auto ch = p.field.chart();
  CHECK(m[1][0] == Poly::parse(ch, "-x3"));
  CHECK(m[2][1] == Poly::parse(ch, "-x1"));
  CHECK(PoissonBivector::from_matrix(ch, m).field == p.field);

  PolyMat diag(3, PolyVec(3, Poly(ch)));
  diag[1][1] = Poly::constant(ch, Scalar(1));
  CHECK_THROWS_AS(PoissonBivector::from_matrix(ch, diag), Error);
  PolyMat asym(3, PolyVec(3, Poly(ch)));
  asym[0][1] = Poly::constant(ch, Scalar(1));
  asym[1][0] = Poly::constant(ch, Scalar(1));
  CHECK_THROWS_AS(PoissonBivector::from_matrix(ch, asym), Error);
}

TEST_CASE("cotangent algebroid of the so3 bivector") {
  PoissonBivector p = so3_bivector();
  PresPtr cot = cotangent_algebroid(p);
  auto ch = cot->chart();
  CHECK(cot->rank() == 3);
  CHECK(cot->gen_name(0) == "dx1");
  CHECK(cot->gen_weights() == std::vector<int>{0, 0, 0});
  // {dx1, dx2} = dx3 and cyclic
  CHECK(cot->bracket(0, 1)[2] == Poly::constant(ch, Scalar(1)));
  CHECK(cot->bracket(1, 2)[0] == Poly::constant(ch, Scalar(1)));
  CHECK(cot->bracket(2, 0)[1] == Poly::constant(ch, Scalar(1)));
  CHECK(validate_presentation(cot).ok());
  CHECK(check_homogeneity(cot).ok);
}

TEST_CASE("multivector complex matches the cotangent complex exactly") {
  std::vector<std::pair<PoissonBivector, std::pair<int, int>>> fixtures = {
      {plane_bivector(Chart::affine(2)), {-2, 2}},
      {so3_bivector(), {0, 2}},
  };
  for (const auto& [p, range] : fixtures) {
    PresPtr cot = cotangent_algebroid(p);
    LichnerowiczComplexModel lich(p);
    ScalarComplexModel scm(cot);
    for (int w = range.first; w <= range.second; ++w) {
      for (int k = 0; k < cot->rank(); ++k) {
        SliceBasis dom_l = build_slice(lich, k, w);
        SliceBasis cod_l = build_slice(lich, k + 1, w);
        SliceBasis dom_s = build_slice(scm, k, w);
        SliceBasis cod_s = build_slice(scm, k + 1, w);
        REQUIRE(dom_l.dim() == dom_s.dim());
        REQUIRE(cod_l.dim() == cod_s.dim());
        CHECK(differential_matrix(lich, dom_l, cod_l) ==
              differential_matrix(scm, dom_s, cod_s));
      }
      CHECK(betti(lich, w).betti == betti(scm, w).betti);
    }
  }
}

TEST_CASE("lichnerowicz differential squares to zero") {
  PoissonBivector p = so3_bivector();
  auto ch = p.field.chart();
  std::mt19937_64 rng(31337);
  for (int deg = 0; deg <= 2; ++deg)
    for (int t = 0; t < 6; ++t) {
      Multivector u = rnd_mv(ch, deg, rng);
      CHECK(lichnerowicz_diff(p, lichnerowicz_diff(p, u)).is_zero());
    }
}

TEST_CASE("tangential presentation of a degenerate bivector") {
  auto ch = Chart::affine(3);
  PoissonBivector p = plane_bivector(ch);
  TangentialModel tm = tangential_algebroid(p);
  CHECK(tm.gens == std::vector<int>{0, 1});
  CHECK(tm.pres->rank() == 2);
  CHECK(validate_presentation(tm.pres).ok());
  // the so3 kernel is the radius function, not a coordinate plane
  CHECK_THROWS_AS(tangential_algebroid(so3_bivector()), StructureError);
}

TEST_CASE("subset presentations must close under the bracket") {
  PoissonBivector p = so3_bivector();
  CHECK_THROWS_AS(cotangent_algebroid(p, {0, 1}), StructureError);
}

TEST_CASE("nonhomogeneous coefficients are rejected") {
  auto ch = Chart::affine(2);
  PolyMat m(2, PolyVec(2, Poly(ch)));
  skew_set(m, 0, 1, Poly::parse(ch, "1 + x1"));
  CHECK_THROWS_AS(cotangent_algebroid(PoissonBivector::from_matrix(ch, m)),
                  StructureError);
}

TEST_CASE("conjugation relabels tuples and coefficients") {
  auto ch = two_pairs_chart();
  PoissonBivector p = holo_bivector(ch, "z");
  CHECK(p.holomorphic);
  PoissonBivector pc = conjugate_bivector(p);
  CHECK(pc.field.coeff({2, 3}) == Poly::parse(ch, "zb"));
  CHECK(pc.field.coeff({0, 1}).is_zero());
  CHECK(!pc.holomorphic);

  PoissonBivector mixed(Multivector::term(ch, {0, 2}, Poly::constant(ch, Scalar(1))));
  CHECK(!mixed.holomorphic);
}

TEST_CASE("skew pairs are matched and their differentials commute") {
  auto ch = two_pairs_chart();
  std::vector<std::pair<PoissonBivector, PoissonBivector>> fixtures = {
      {holo_bivector(ch, "1"), holo_bivector(ch, "1")},
      {holo_bivector(ch, "1"), holo_bivector(ch, "z")},
      {holo_bivector(ch, "z"), holo_bivector(ch, "z")},
  };
  for (const auto& [p1, p2] : fixtures) {
    MatchedPair mp = skew_pair(p1, p2);
    CHECK(check_matched(mp).ok());
    CHECK(bihamiltonian_check(p1, p2).ok());
    PresPtr bt = bowtie(mp);
    CHECK(validate_presentation(bt).ok());
    for (int w = -2; w <= 2; ++w) {
      DoubleComplexSlice dc = double_complex(mp, w);
      CHECK(check_double(dc).ok());
      // partial_1 partial_2 = partial_2 partial_1 once the sign dressing of
      // the stored vertical blocks is removed
      for (int p = 0; p + 1 <= dc.pmax; ++p)
        for (int q = 0; q + 1 <= dc.qmax; ++q) {
          ScalarMat left =
              mat_mul(scale_mat(dc.d2[p + 1][q], (p + 1) % 2 ? -1 : 1), dc.d1[p][q]);
          ScalarMat right =
              mat_mul(dc.d1[p][q + 1], scale_mat(dc.d2[p][q], p % 2 ? -1 : 1));
          CHECK(left == right);
        }
      CHECK(betti(total_complex(dc), w).betti ==
            betti(ScalarComplexModel(bt), w).betti);
    }
  }
}

TEST_CASE("skew pair construction rejects bad input") {
  auto ch = two_pairs_chart();
  PoissonBivector holo = holo_bivector(ch, "1");
  Multivector bad = Multivector::term(ch, {0, 2}, Poly::constant(ch, Scalar(1)));
  CHECK_THROWS_AS(skew_pair(holo, PoissonBivector(bad)), Error);
  // unpaired real chart has no conjugate half
  PoissonBivector real_p = plane_bivector(Chart::affine(2));
  CHECK_THROWS_AS(skew_pair(real_p, real_p), Error);
}

TEST_CASE("bihamiltonian check flags incompatible brackets") {
  auto ch = two_pairs_chart();
  // holomorphic p1, but conj(p2) has a holomorphic coefficient that p1 moves
  PoissonBivector p1 = holo_bivector(ch, "z");
  PolyMat m2(4, PolyVec(4, Poly(ch)));
  skew_set(m2, 0, 1, Poly::parse(ch, "zb"));
  PoissonBivector p2 = PoissonBivector::from_matrix(ch, m2);
  BihamiltonianReport r = bihamiltonian_check(p1, p2);
  CHECK(r.jacobi1_ok);
  CHECK(r.jacobi2_ok);
  CHECK(!r.mixed_ok);
  CHECK(!r.witness.is_zero());
  CHECK(!r.ok());
  // a factor that is not Poisson at all
  Multivector bad =
      Multivector::term(ch, {0, 1}, Poly::constant(ch, Scalar(1))) +
      Multivector::term(ch, {0, 2}, Poly::parse(ch, "z"));
  BihamiltonianReport rb = bihamiltonian_check(PoissonBivector(bad), p1);
  CHECK(!rb.jacobi1_ok);
  CHECK(!rb.ok());
}
