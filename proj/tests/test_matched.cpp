#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lalg/homology.hpp"
#include "lalg/matched.hpp"
#include "lalg/models.hpp"

#include <map>
#include <vector>

using namespace lalg;

namespace {

using Consts = std::vector<std::vector<std::vector<Scalar>>>;

// constant-structure algebroid with zero anchor over a given chart
PresPtr over_chart(const ChartPtr& ch, int r, const Consts& c,
                   const std::string& stem) {
  std::vector<std::string> names;
  for (int i = 1; i <= r; ++i) names.push_back(stem + std::to_string(i));
  PolyMat anchor(r, PolyVec(ch->size(), Poly(ch)));
  std::vector<std::vector<PolyVec>> structure(
      r, std::vector<PolyVec>(r, PolyVec(r, Poly(ch))));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        structure[i][j][k] = Poly::constant(ch, c[i][j][k]);
  return AlgebroidPresentation::create(ch, std::move(names),
                                       std::vector<int>(r, 0), std::move(anchor),
                                       std::move(structure));
}

Consts zero_consts(int r) {
  return Consts(r, std::vector<std::vector<Scalar>>(r, std::vector<Scalar>(r, Scalar(0))));
}

Consts heis3_consts() {
  Consts c = zero_consts(3);
  c[0][1][2] = Scalar(1);
  c[1][0][2] = Scalar(-1);
  return c;
}

std::vector<int> page_totals(const FilteredPage& page, int top_degree) {
  std::vector<int> out(top_degree + 1, 0);
  for (const auto& [pq, d] : page.dims) {
    int k = pq.first + pq.second;
    if (k >= 0 && k <= top_degree) out[k] += d;
  }
  return out;
}

}  // namespace

TEST_CASE("holomorphic tangent pairs are matched") {
  for (int n = 1; n <= 2; ++n) {
    MatchedPair mp = tangent_pair(n);
    MatchedReport r = check_matched(mp);
    CHECK(r.ok());
    CHECK(r.witness.empty());
    CHECK(validate_presentation(bowtie(mp)).ok());
  }
}

TEST_CASE("matched pairs yield anticommuting differentials") {
  MatchedPair mp = tangent_pair(1);
  for (int w = -3; w <= 3; ++w) {
    DoubleComplexSlice dc = double_complex(mp, w);
    DoubleReport r = check_double(dc);
    CHECK(r.d1_ok);
    CHECK(r.d2_ok);
    CHECK(r.anti_ok);
  }
}

TEST_CASE("total complex cohomology equals bowtie cohomology") {
  std::vector<MatchedPair> pairs = {tangent_pair(1), tangent_pair(2)};
  auto ch = Chart::affine(1);
  pairs.push_back(matched_zero_pair(over_chart(ch, 2, zero_consts(2), "a"),
                                    over_chart(ch, 3, heis3_consts(), "b")));
  for (const auto& mp : pairs) {
    PresPtr bt = bowtie(mp);
    REQUIRE(check_matched(mp).ok());
    for (int w = -3; w <= 3; ++w) {
      DoubleComplexSlice dc = double_complex(mp, w);
      BettiTable via_total = betti(total_complex(dc), w);
      BettiTable via_bowtie = betti(ScalarComplexModel(bt), w);
      CHECK(via_total.betti == via_bowtie.betti);
    }
  }
}

TEST_CASE("bowtie of the split tangent model matches the full tangent model") {
  MatchedPair mp = tangent_pair(1);
  PresPtr bt = bowtie(mp);
  PresPtr full = tangent_algebroid(bt->chart());
  for (int w = -2; w <= 2; ++w)
    CHECK(betti(ScalarComplexModel(bt), w).betti ==
          betti(ScalarComplexModel(full), w).betti);
}

TEST_CASE("a non matched action fails and its differentials do not anticommute") {
  // scaling action on the first heisenberg generator is not a derivation of
  // the bracket {f1,f2} = f3
  PresPtr a1 = abelian_point(1);
  PresPtr a2 = heisenberg3_point();
  auto ch = a1->chart();
  std::vector<PolyMat> g12(1, PolyMat(3, PolyVec(3, Poly(ch))));
  g12[0][0][0] = Poly::constant(ch, Scalar(1));
  std::vector<PolyMat> g21(3, PolyMat(1, PolyVec(1, Poly(ch))));
  MatchedPair mp = make_matched(a1, a2, g12, g21);

  MatchedReport r = check_matched(mp);
  CHECK(!r.ok());
  CHECK(!r.mixed12_ok);
  CHECK(!r.witness.empty());

  DoubleComplexSlice dc = double_complex(mp, 0);
  DoubleReport d = check_double(dc);
  CHECK(!d.anti_ok);
}

TEST_CASE("column spectral sequence of the split tangent model degenerates") {
  MatchedPair mp = tangent_pair(1);
  for (int w = -3; w <= 3; ++w) {
    DoubleComplexSlice dc = double_complex(mp, w);
    SpectralResult sr = spectral_pages(dc);
    for (size_t p = 0; p < sr.e1.size(); ++p)
      for (size_t q = 1; q < sr.e1[p].size(); ++q) CHECK(sr.e1[p][q] == 0);
    BettiTable total = betti(total_complex(dc), w);
    for (size_t p = 0; p < sr.e2.size(); ++p)
      CHECK(sr.e2[p][0] == total.betti[p]);
  }
}

TEST_CASE("level filtration pages abut to the total cohomology") {
  MatchedPair mp = tangent_pair(1);
  for (int w = -2; w <= 2; ++w) {
    DoubleComplexSlice dc = double_complex(mp, w);
    FilteredComplex fc = level_filtration(dc);
    auto pages = filtered_pages(fc, 5);
    REQUIRE(!pages.empty());
    BettiTable total = betti(total_complex(dc), w);
    int top = static_cast<int>(total.betti.size()) - 1;
    CHECK(page_totals(pages.back(), top) == total.betti);
    // associated graded of page zero fills the whole slice
    std::vector<int> gr = page_totals(pages.front(), top);
    for (int k = 0; k <= top; ++k) CHECK(gr[k] == total.dims[k]);
  }
}
