#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lalg/errors.hpp"
#include "lalg/models.hpp"
#include "lalg/presentation.hpp"

#include <vector>

using namespace lalg;

namespace {

using Table = std::vector<std::vector<std::vector<Scalar>>>;

Table zero_table(int r) {
  return Table(r, std::vector<std::vector<Scalar>>(r, std::vector<Scalar>(r, Scalar(0))));
}

Table sl2_table() {
  Table c = zero_table(3);
  c[0][1][1] = Scalar(2);
  c[1][0][1] = Scalar(-2);
  c[0][2][2] = Scalar(-2);
  c[2][0][2] = Scalar(2);
  c[1][2][0] = Scalar(1);
  c[2][1][0] = Scalar(-1);
  return c;
}

}  // namespace

TEST_CASE("bundled fixtures satisfy the axioms") {
  for (const PresPtr& p : {sl2_point(), heisenberg3_point(), abelian_point(2),
                           tangent_algebroid(2), foliation_algebroid(1, 2).pres}) {
    AxiomReport r = validate_presentation(p);
    CHECK(r.ok());
    CHECK(r.witness.empty());
    CHECK(check_homogeneity(p).ok);
  }
}

TEST_CASE("sl2 names and bracket table") {
  PresPtr p = sl2_point();
  CHECK(p->rank() == 3);
  CHECK(p->gen_name(0) == "h");
  CHECK(p->gen_name(1) == "e");
  CHECK(p->gen_name(2) == "f");
  // {h,e} = 2e
  CHECK(p->bracket(0, 1)[1] == Poly::constant(p->chart(), Scalar(2)));
  CHECK(p->bracket(0, 1)[0].is_zero());
  // {e,f} = h
  CHECK(p->bracket(1, 2)[0] == Poly::constant(p->chart(), Scalar(1)));
}

TEST_CASE("breaking jacobi is detected with a witness") {
  Table c = sl2_table();
  c[1][2][0] = Scalar(3);  // {e,f} = 3h on one side only breaks antisymmetry
  CHECK_THROWS_AS(lie_algebra_point(c, {"h", "e", "f"}), StructureError);

  c = sl2_table();
  c[1][2][0] = Scalar(3);
  c[2][1][0] = Scalar(-3);  // antisymmetric but the Jacobi identity fails
  PresPtr jacobi_broken = lie_algebra_point(c, {"h", "e", "f"});
  AxiomReport r2 = validate_presentation(jacobi_broken);
  CHECK(!r2.jacobi_ok);
  CHECK(!r2.witness.empty());
}

TEST_CASE("anchor morphism failure is detected") {
  // identity anchor with a nonzero constant bracket cannot be a morphism:
  // [a(e1), a(e2)] = 0 but a({e1,e2}) = a(e3) != 0
  auto ch = Chart::affine(3);
  PolyMat anchor(3, PolyVec(3, Poly(ch)));
  for (int i = 0; i < 3; ++i) anchor[i][i] = Poly::constant(ch, Scalar(1));
  std::vector<std::vector<PolyVec>> structure(
      3, std::vector<PolyVec>(3, PolyVec(3, Poly(ch))));
  structure[0][1][2] = Poly::constant(ch, Scalar(1));
  structure[1][0][2] = Poly::constant(ch, Scalar(-1));
  PresPtr p = AlgebroidPresentation::create(ch, {"a", "b", "c"}, {-1, -1, -1},
                                            anchor, structure);
  AxiomReport r = validate_presentation(p);
  CHECK(!r.anchor_morphism_ok);
}

TEST_CASE("homogeneity violations are reported") {
  // tangent-like presentation with a mixed-weight anchor entry
  auto ch = Chart::create({{"x", 1}, {"y", 2}});
  PolyMat anchor(2, PolyVec(2, Poly(ch)));
  anchor[0][0] = Poly::constant(ch, Scalar(1));
  anchor[1][1] = Poly::parse(ch, "1 + x");
  std::vector<std::vector<PolyVec>> structure(
      2, std::vector<PolyVec>(2, PolyVec(2, Poly(ch))));
  PresPtr p = AlgebroidPresentation::create(ch, {"u", "v"}, {-1, -2}, anchor,
                                            structure);
  WeightReport w = check_homogeneity(p);
  CHECK(!w.ok);
  CHECK(!w.violations.empty());
}

TEST_CASE("section arithmetic and leibniz bracket") {
  PresPtr p = tangent_algebroid(2);
  auto ch = p->chart();
  Poly f = Poly::parse(ch, "x1^2");
  Poly g = Poly::parse(ch, "x2");
  Section X = Section::generator(p, 0);
  Section Y = Section::generator(p, 1);
  // [f d1, g d2] = f (d1 g) d2 - g (d2 f) d1 + f g [d1, d2]
  Section lhs = bracket_sections(f * X, g * Y);
  Section rhs = f * p->anchor_apply(0, g) * Y - g * p->anchor_apply(1, f) * X;
  CHECK(lhs == rhs);
  CHECK((X + Y) - Y == X);
  CHECK(Section::zero(p).is_zero());
  CHECK(X.str() == "(1)*d_x1");
}

TEST_CASE("anchor application") {
  PresPtr p = tangent_algebroid(2);
  auto ch = p->chart();
  Poly f = Poly::parse(ch, "x1*x2^2");
  CHECK(p->anchor_apply(0, f) == Poly::parse(ch, "x2^2"));
  PolyVec u = {Poly::parse(ch, "x2"), Poly::parse(ch, "x1")};
  CHECK(p->anchor_apply(u, f) == Poly::parse(ch, "x2^3 + 2*x1^2*x2"));
}

TEST_CASE("creation rejects malformed data") {
  auto ch = Chart::affine(2);
  PolyMat anchor(2, PolyVec(2, Poly(ch)));
  std::vector<std::vector<PolyVec>> structure(
      2, std::vector<PolyVec>(2, PolyVec(2, Poly(ch))));
  CHECK_THROWS_AS(AlgebroidPresentation::create(ch, {"a"}, {0, 0}, anchor, structure),
                  Error);
  PolyMat bad_anchor(1, PolyVec(2, Poly(ch)));
  CHECK_THROWS_AS(
      AlgebroidPresentation::create(ch, {"a", "b"}, {0, 0}, bad_anchor, structure),
      Error);
}

TEST_CASE("foliation presentation shape") {
  FoliationModel fm = foliation_algebroid(1, 3);
  CHECK(fm.leaf_dim == 1);
  CHECK(fm.pres->rank() == 1);
  CHECK(fm.pres->chart()->size() == 3);
  CHECK(fm.pres->anchor(0, 0) == Poly::constant(fm.pres->chart(), Scalar(1)));
  CHECK(fm.pres->anchor(0, 1).is_zero());
}
