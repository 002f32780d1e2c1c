#include "lalg/slices.hpp"

#include "lalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lalg {

namespace {

void enumerate(const ChartPtr& chart, int var, int remaining, Exps& cur,
               std::vector<Exps>& out) {
  int n = chart->size();
  if (var == n) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (var == n - 1) {
    int w = chart->weight(var);
    if (remaining % w == 0) {
      cur[var] = remaining / w;
      out.push_back(cur);
      cur[var] = 0;
    }
    return;
  }
  int w = chart->weight(var);
  for (int k = 0; k * w <= remaining; ++k) {
    cur[var] = k;
    enumerate(chart, var + 1, remaining - k * w, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exps> monomials_of_weight(const ChartPtr& chart, int w) {
  if (!chart) throw Error("monomial enumeration needs a chart");
  for (int j = 0; j < chart->size(); ++j)
    if (chart->weight(j) <= 0)
      throw Error("weight slicing requires positive variable weights");
  std::vector<Exps> out;
  if (w < 0) return out;
  if (chart->size() == 0) {
    if (w == 0) out.push_back(Exps{});
    return out;
  }
  Exps cur(chart->size(), 0);
  enumerate(chart, 0, w, cur, out);
  std::sort(out.begin(), out.end(), MonoCmp{});
  return out;
}

SliceBasis build_slice(const ComplexModel& m, int degree, int weight) {
  SliceBasis out;
  out.degree = degree;
  out.weight = weight;
  if (degree < 0 || degree > m.ext_rank()) return out;
  for (const auto& t : tuples(m.ext_rank(), degree)) {
    int tw = 0;
    for (int i : t) tw += m.ext_weight(i);
    for (int b = 0; b < m.value_dim(); ++b) {
      int d = weight + tw + m.value_weight(b);
      for (const auto& e : monomials_of_weight(m.chart(), d)) {
        out.index[{t, b, e}] = static_cast<int>(out.elems.size());
        out.elems.push_back(BasisElement{t, b, e});
      }
    }
  }
  return out;
}

ScalarMat differential_matrix(const ComplexModel& m, const SliceBasis& dom,
                              const SliceBasis& cod) {
  if (cod.degree != dom.degree + 1 || cod.weight != dom.weight)
    throw Error("differential matrix endpoints mismatch");
  ScalarMat out(cod.dim(), dom.dim());
  for (int c = 0; c < dom.dim(); ++c) {
    auto image = m.apply(dom.degree, dom.elems[c]);
    for (const auto& [key, coeff] : image) {
      for (const auto& [mono, s] : coeff.terms()) {
        auto it = cod.index.find({key.first, key.second, mono});
        if (it == cod.index.end()) {
          std::ostringstream os;
          os << "differential leaves the weight " << dom.weight
             << " slice at degree " << dom.degree << " (column " << c << ")";
          throw StructureError(os.str());
        }
        out.at(it->second, c) += s;
      }
    }
  }
  return out;
}

std::map<std::pair<IndexTuple, int>, Poly> ScalarComplexModel::apply(
    int degree, const BasisElement& e) const {
  Cochain xi(pres_, degree, 1);
  xi.set_term(e.ext, PolyVec{Poly::monomial(pres_->chart(), e.mono, Scalar(1))});
  Cochain dxi = cochain_diff(xi);
  std::map<std::pair<IndexTuple, int>, Poly> out;
  for (const auto& [t, v] : dxi.terms())
    if (!v[0].is_zero()) out[{t, 0}] = v[0];
  return out;
}

std::map<std::pair<IndexTuple, int>, Poly> TwistedComplexModel::apply(
    int degree, const BasisElement& e) const {
  Cochain xi(rep_.pres, degree, rep_.rank);
  PolyVec v(rep_.rank, Poly(rep_.pres->chart()));
  v[e.val] = Poly::monomial(rep_.pres->chart(), e.mono, Scalar(1));
  xi.set_term(e.ext, std::move(v));
  Cochain dxi = twisted_diff(rep_, xi);
  std::map<std::pair<IndexTuple, int>, Poly> out;
  for (const auto& [t, val] : dxi.terms())
    for (int b = 0; b < rep_.rank; ++b)
      if (!val[b].is_zero()) out[{t, b}] = val[b];
  return out;
}

}  // namespace lalg
