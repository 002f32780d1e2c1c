#include "lalg/models.hpp"

#include "lalg/errors.hpp"

namespace lalg {

namespace {

std::vector<std::vector<PolyVec>> zero_structure(const ChartPtr& chart, int r) {
  return std::vector<std::vector<PolyVec>>(
      r, std::vector<PolyVec>(r, PolyVec(r, Poly(chart))));
}

}  // namespace

PresPtr tangent_algebroid(const ChartPtr& chart) {
  if (!chart || chart->size() == 0) throw Error("tangent model needs a nonempty chart");
  int n = chart->size();
  std::vector<std::string> names;
  std::vector<int> weights;
  PolyMat anchor(n, PolyVec(n, Poly(chart)));
  for (int i = 0; i < n; ++i) {
    names.push_back("d_" + chart->name(i));
    weights.push_back(-chart->weight(i));
    anchor[i][i] = Poly::constant(chart, Scalar(1));
  }
  return AlgebroidPresentation::create(chart, std::move(names), std::move(weights),
                                       std::move(anchor), zero_structure(chart, n));
}

PresPtr tangent_algebroid(int n) {
  if (n < 1) throw Error("tangent model needs n >= 1");
  return tangent_algebroid(Chart::affine(n));
}

PresPtr lie_algebra_point(const std::vector<std::vector<std::vector<Scalar>>>& c,
                          std::vector<std::string> names) {
  int r = static_cast<int>(c.size());
  ChartPtr chart = Chart::create(std::vector<VarSpec>{});
  if (names.empty())
    for (int i = 1; i <= r; ++i) names.push_back("e" + std::to_string(i));
  if (static_cast<int>(names.size()) != r) throw Error("generator name count mismatch");
  std::vector<int> weights(r, 0);
  PolyMat anchor(r, PolyVec(0));
  auto structure = zero_structure(chart, r);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(c[i].size()) != r) throw StructureError("structure table shape");
    for (int j = 0; j < r; ++j) {
      if (static_cast<int>(c[i][j].size()) != r) throw StructureError("structure table shape");
      for (int k = 0; k < r; ++k)
        structure[i][j][k] = Poly::constant(chart, c[i][j][k]);
    }
  }
  return AlgebroidPresentation::create(chart, std::move(names), std::move(weights),
                                       std::move(anchor), std::move(structure));
}

FoliationModel foliation_algebroid(const ChartPtr& chart, int m) {
  if (!chart) throw Error("foliation model needs a chart");
  int n = chart->size();
  if (m < 1 || m > n) throw Error("leaf dimension must satisfy 1 <= m <= n");
  std::vector<std::string> names;
  std::vector<int> weights;
  PolyMat anchor(m, PolyVec(n, Poly(chart)));
  for (int i = 0; i < m; ++i) {
    names.push_back("d_" + chart->name(i));
    weights.push_back(-chart->weight(i));
    anchor[i][i] = Poly::constant(chart, Scalar(1));
  }
  FoliationModel out;
  out.pres = AlgebroidPresentation::create(chart, std::move(names), std::move(weights),
                                           std::move(anchor), zero_structure(chart, m));
  out.leaf_dim = m;
  return out;
}

FoliationModel foliation_algebroid(int m, int n) {
  if (m < 1 || m > n) throw Error("leaf dimension must satisfy 1 <= m <= n");
  std::vector<VarSpec> vars;
  for (int j = 1; j <= m; ++j) vars.push_back({m == 1 ? std::string("z") : "z" + std::to_string(j), 1});
  for (int j = 1; j <= n - m; ++j)
    vars.push_back({n - m == 1 ? std::string("y") : "y" + std::to_string(j), 1});
  return foliation_algebroid(Chart::create(std::move(vars)), m);
}

namespace {

std::vector<std::vector<std::vector<Scalar>>> zero_consts(int r) {
  return std::vector<std::vector<std::vector<Scalar>>>(
      r, std::vector<std::vector<Scalar>>(r, std::vector<Scalar>(r, Scalar(0))));
}

void set_bracket(std::vector<std::vector<std::vector<Scalar>>>& c, int i, int j,
                 std::vector<Scalar> coeffs) {
  for (size_t k = 0; k < coeffs.size(); ++k) {
    c[i][j][k] = coeffs[k];
    c[j][i][k] = -coeffs[k];
  }
}

}  // namespace

PresPtr sl2_point() {
  // generators h, e, f with [h,e] = 2e, [h,f] = -2f, [e,f] = h
  auto c = zero_consts(3);
  set_bracket(c, 0, 1, {Scalar(0), Scalar(2), Scalar(0)});
  set_bracket(c, 0, 2, {Scalar(0), Scalar(0), Scalar(-2)});
  set_bracket(c, 1, 2, {Scalar(1), Scalar(0), Scalar(0)});
  return lie_algebra_point(c, {"h", "e", "f"});
}

PresPtr heisenberg3_point() {
  // [e1,e2] = e3
  auto c = zero_consts(3);
  set_bracket(c, 0, 1, {Scalar(0), Scalar(0), Scalar(1)});
  return lie_algebra_point(c);
}

PresPtr abelian_point(int rank) { return lie_algebra_point(zero_consts(rank)); }

}  // namespace lalg
