#include "lalg/complex_struct.hpp"

#include "lalg/errors.hpp"
#include "lalg/slices.hpp"

#include <optional>
#include <sstream>

namespace lalg {

namespace {

Poly poly_row_dot(const PolyVec& v, const PolyMat& m, int col) {
  Poly out(v.empty() ? ChartPtr() : v[0].chart());
  for (size_t i = 0; i < v.size(); ++i) out += v[i] * m[i][col];
  return out;
}

// v . m for a coordinate row of a section
PolyVec apply_endo(const PolyVec& v, const PolyMat& m) {
  PolyVec out;
  for (size_t j = 0; j < m.size(); ++j) out.push_back(poly_row_dot(v, m, j));
  return out;
}

std::optional<Scalar> constant_of(const Poly& p) {
  if (p.is_zero()) return Scalar(0);
  if (p.terms().size() != 1) return std::nullopt;
  const auto& [mono, c] = *p.terms().begin();
  for (int e : mono)
    if (e != 0) return std::nullopt;
  return c;
}

ScalarMat inverse(const ScalarMat& m) {
  Rref red = rref(hcat(m, ScalarMat::identity(m.rows)));
  if (red.rank != m.rows) throw StructureError("frame matrix is singular");
  ScalarMat out(m.rows, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.rows; ++j) out.at(i, j) = red.mat.at(i, j + m.cols);
  return out;
}

}  // namespace

AlmostComplexStructure AlmostComplexStructure::create(PresPtr pres, PolyMat j,
                                                      PolyMat jm) {
  int r = pres->rank();
  int n = pres->chart()->size();
  if (r % 2 != 0) throw StructureError("generator rank must be even");
  if (static_cast<int>(j.size()) != r) throw Error("endomorphism shape");
  for (const auto& row : j)
    if (static_cast<int>(row.size()) != r) throw Error("endomorphism shape");
  if (static_cast<int>(jm.size()) != n) throw Error("base endomorphism shape");
  for (const auto& row : jm)
    if (static_cast<int>(row.size()) != n) throw Error("base endomorphism shape");
  return {std::move(pres), std::move(j), std::move(jm)};
}

AcsReport validate_acs(const AlmostComplexStructure& s) {
  AcsReport out;
  const PresPtr& p = s.pres;
  const ChartPtr& chart = p->chart();
  int r = p->rank();
  int n = chart->size();
  auto note = [&](std::string w) {
    if (out.witness.empty()) out.witness = std::move(w);
  };
  for (int i = 0; i < r && out.square_ok; ++i)
    for (int k = 0; k < r; ++k) {
      Poly acc(chart);
      for (int m = 0; m < r; ++m) acc += s.j[i][m] * s.j[m][k];
      if (i == k) acc += Poly::constant(chart, Scalar(1));
      if (!acc.is_zero()) {
        out.square_ok = false;
        std::ostringstream os;
        os << "square of the endomorphism differs from -1 at (" << i << ", " << k
           << ")";
        note(os.str());
        break;
      }
    }
  for (int i = 0; i < r && out.anchor_ok; ++i)
    for (int k = 0; k < n; ++k) {
      Poly lhs(chart), rhs(chart);
      for (int m = 0; m < n; ++m) lhs += p->anchor(i, m) * s.jm[m][k];
      for (int m = 0; m < r; ++m) rhs += s.j[i][m] * p->anchor(m, k);
      if (!(lhs - rhs).is_zero()) {
        out.anchor_ok = false;
        std::ostringstream os;
        os << "anchor does not intertwine the endomorphisms at generator " << i
           << ", variable " << chart->name(k);
        note(os.str());
        break;
      }
    }
  auto check_weights = [&](const PolyMat& m, auto weight_of, const char* label) {
    for (size_t i = 0; i < m.size() && out.weights_ok; ++i)
      for (size_t k = 0; k < m[i].size(); ++k) {
        if (m[i][k].is_zero()) continue;
        auto hw = m[i][k].homogeneous_weight();
        if (!hw || *hw != weight_of(static_cast<int>(i)) - weight_of(static_cast<int>(k))) {
          out.weights_ok = false;
          std::ostringstream os;
          os << label << " entry (" << i << ", " << k
             << ") is not homogeneous of the frame weight gap";
          note(os.str());
          break;
        }
      }
  };
  check_weights(s.j, [&](int i) { return p->gen_weight(i); }, "endomorphism");
  check_weights(s.jm, [&](int i) { return chart->weight(i); }, "base endomorphism");
  return out;
}

SplitFrames split_complexified(const AlmostComplexStructure& s) {
  const PresPtr& p = s.pres;
  int r = p->rank();
  ScalarMat jc(r, r);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      auto c = constant_of(s.j[i][k]);
      if (!c) throw StructureError("eigenframes need constant coefficients");
      jc.at(i, k) = *c;
    }
  Scalar img(0, 1);
  auto projector_frame = [&](const Scalar& sign) {
    ScalarMat pr(r, r);
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < r; ++k) {
        Scalar v = sign * img * jc.at(i, k);
        if (i == k) v += Scalar(1);
        pr.at(i, k) = v / Scalar(2);
      }
    Rref red = rref(pr);
    if (red.rank != r / 2) throw StructureError("eigenspace has the wrong size");
    ScalarMat rows(r / 2, r);
    for (int i = 0; i < r / 2; ++i)
      for (int k = 0; k < r; ++k) rows.at(i, k) = red.mat.at(i, k);
    return rows;
  };
  SplitFrames out;
  ScalarMat hrows = projector_frame(Scalar(-1));
  ScalarMat arows = projector_frame(Scalar(1));
  out.frame = ScalarMat(r, r);
  for (int i = 0; i < r / 2; ++i)
    for (int k = 0; k < r; ++k) {
      out.frame.at(i, k) = hrows.at(i, k);
      out.frame.at(r / 2 + i, k) = arows.at(i, k);
    }
  if (rank_dense(out.frame) != r)
    throw StructureError("eigenframes do not span the complexified bundle");
  auto to_section = [&](const ScalarMat& rows, int i) {
    PolyVec v;
    for (int k = 0; k < r; ++k)
      v.push_back(Poly::constant(p->chart(), rows.at(i, k)));
    return Section{p, std::move(v)};
  };
  for (int i = 0; i < r / 2; ++i) out.holo.push_back(to_section(hrows, i));
  for (int i = 0; i < r / 2; ++i) out.anti.push_back(to_section(arows, i));
  return out;
}

PresPtr change_frame(const PresPtr& p, const ScalarMat& t,
                     std::vector<std::string> names) {
  const ChartPtr& chart = p->chart();
  int r = p->rank();
  int n = chart->size();
  if (t.rows != r || t.cols != r) throw Error("frame matrix shape");
  if (static_cast<int>(names.size()) != r) throw Error("one name per generator");
  ScalarMat tinv = inverse(t);
  std::vector<int> weights(r, 0);
  for (int i = 0; i < r; ++i) {
    bool seen = false;
    for (int k = 0; k < r; ++k) {
      if (t.at(i, k) == Scalar(0)) continue;
      if (!seen) {
        weights[i] = p->gen_weight(k);
        seen = true;
      } else if (weights[i] != p->gen_weight(k)) {
        throw StructureError("frame row mixes generator weights");
      }
    }
    if (!seen) throw StructureError("frame matrix is singular");
  }
  PolyMat anchor(r, PolyVec(n, Poly(chart)));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < r; ++m) anchor[i][k] += t.at(i, m) * p->anchor(m, k);
  std::vector<std::vector<PolyVec>> structure(
      r, std::vector<PolyVec>(r, PolyVec(r, Poly(chart))));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k) {
      PolyVec old(r, Poly(chart));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          Scalar c = t.at(i, a) * t.at(k, b);
          if (c == Scalar(0)) continue;
          PolyVec bk = p->bracket(a, b);
          for (int m = 0; m < r; ++m) old[m] += c * bk[m];
        }
      for (int m = 0; m < r; ++m)
        for (int q = 0; q < r; ++q) structure[i][k][q] += tinv.at(m, q) * old[m];
    }
  return AlgebroidPresentation::create(chart, std::move(names), std::move(weights),
                                       std::move(anchor), std::move(structure));
}

SplitPresentation split_presentation(const AlmostComplexStructure& s) {
  SplitFrames fr = split_complexified(s);
  int h = static_cast<int>(fr.holo.size());
  std::vector<std::string> names;
  for (int i = 0; i < h; ++i) names.push_back("h" + std::to_string(i + 1));
  for (int i = 0; i < h; ++i) names.push_back("hb" + std::to_string(i + 1));
  return {change_frame(s.pres, fr.frame, std::move(names)), h};
}

NijenhuisReport nijenhuis(const AlmostComplexStructure& s) {
  const PresPtr& p = s.pres;
  int r = p->rank();
  NijenhuisReport out;
  auto japply = [&](const Section& x) {
    return Section{p, apply_endo(x.coeff, s.j)};
  };
  for (int i = 0; i < r; ++i)
    for (int k = i + 1; k < r; ++k) {
      Section ei = Section::generator(p, i);
      Section ek = Section::generator(p, k);
      Section ji = japply(ei);
      Section jk = japply(ek);
      Section val = bracket_sections(ji, jk) - japply(bracket_sections(ji, ek)) -
                    japply(bracket_sections(ei, jk)) - bracket_sections(ei, ek);
      if (!val.is_zero() && out.witness.empty()) {
        out.ok = false;
        std::ostringstream os;
        os << "torsion at (" << p->gen_name(i) << ", " << p->gen_name(k)
           << ") = " << val.str();
        out.witness = os.str();
      }
      out.values.emplace_back(i, k, std::move(val));
    }
  return out;
}

DComponent component_from_name(const std::string& name) {
  if (name == "d'") return DComponent::holo2;
  if (name == "d") return DComponent::holo;
  if (name == "dbar") return DComponent::anti;
  if (name == "d''") return DComponent::anti2;
  throw Error("unknown differential component " + name);
}

std::pair<int, int> bidegree_of(const SplitPresentation& sp, const IndexTuple& t) {
  int p = 0;
  for (int i : t)
    if (i < sp.holo) ++p;
  return {p, static_cast<int>(t.size()) - p};
}

Cochain project_bidegree(const SplitPresentation& sp, const Cochain& xi, int p,
                         int q) {
  Cochain out(sp.pres, xi.degree(), xi.value_dim());
  for (const auto& [t, v] : xi.terms())
    if (bidegree_of(sp, t) == std::make_pair(p, q)) out.set_term(t, v);
  return out;
}

BigradedCochain bidegree_split(const SplitPresentation& sp, const Cochain& xi,
                               DComponent c) {
  int p = xi.degree();
  int q = 0;
  bool first = true;
  for (const auto& [t, v] : xi.terms()) {
    (void)v;
    auto pq = bidegree_of(sp, t);
    if (first) {
      p = pq.first;
      q = pq.second;
      first = false;
    } else if (pq != std::make_pair(p, q)) {
      throw Error("cochain mixes exterior bidegrees");
    }
  }
  int dp = 0, dq = 0;
  switch (c) {
    case DComponent::holo2: dp = 2; dq = -1; break;
    case DComponent::holo: dp = 1; dq = 0; break;
    case DComponent::anti: dp = 0; dq = 1; break;
    case DComponent::anti2: dp = -1; dq = 2; break;
  }
  Cochain d = cochain_diff(xi);
  BigradedCochain out{p + dp, q + dq, Cochain(sp.pres, d.degree(), d.value_dim())};
  if (out.p >= 0 && out.q >= 0) out.terms = project_bidegree(sp, d, out.p, out.q);
  return out;
}

FilteredComplex filtration_slices(const SplitPresentation& sp, int weight) {
  ScalarComplexModel model(sp.pres);
  SliceComplex sc = build_complex(model, weight);
  FilteredComplex out;
  out.cx = sc.cx;
  for (size_t k = 0; k < sc.bases.size(); ++k) {
    std::vector<int> lv;
    for (const auto& e : sc.bases[k].elems) {
      auto pq = bidegree_of({sp.pres, sp.holo}, e.ext);
      lv.push_back(pq.first + static_cast<int>(k));
    }
    out.level.push_back(std::move(lv));
  }
  return out;
}

FilteredComplex filtration_slices(const AlmostComplexStructure& s, int weight) {
  return filtration_slices(split_presentation(s), weight);
}

}  // namespace lalg
