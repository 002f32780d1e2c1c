#include "lalg/matched.hpp"

#include "lalg/errors.hpp"
#include "lalg/models.hpp"
#include "lalg/probes.hpp"

#include <random>
#include <sstream>

namespace lalg {

MatchedPair make_matched(const PresPtr& a1, const PresPtr& a2,
                         std::vector<PolyMat> gamma12, std::vector<PolyMat> gamma21) {
  if (!a1 || !a2) throw Error("matched pair needs two presentations");
  if (a1->chart() != a2->chart())
    throw ChartMismatchError("matched pair members must share the chart");
  MatchedPair mp;
  mp.a1 = a1;
  mp.a2 = a2;
  mp.rep12 = Representation::create(a1, std::move(gamma12), a2->gen_weights());
  mp.rep21 = Representation::create(a2, std::move(gamma21), a1->gen_weights());
  if (mp.rep12.rank != a2->rank() || mp.rep21.rank != a1->rank())
    throw StructureError("connection matrix rank must match the partner");
  return mp;
}

MatchedPair matched_zero_pair(const PresPtr& a1, const PresPtr& a2) {
  const ChartPtr& chart = a1->chart();
  std::vector<PolyMat> g12(a1->rank(),
                           PolyMat(a2->rank(), PolyVec(a2->rank(), Poly(chart))));
  std::vector<PolyMat> g21(a2->rank(),
                           PolyMat(a1->rank(), PolyVec(a1->rank(), Poly(chart))));
  return make_matched(a1, a2, std::move(g12), std::move(g21));
}

MatchedPair tangent_pair(int n) {
  if (n < 1) throw Error("tangent pair needs n >= 1");
  std::vector<VarSpec> vars;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int j = 1; j <= n; ++j) {
    std::string stem = n == 1 ? std::string() : std::to_string(j);
    vars.push_back({"z" + stem, 1});
    vars.push_back({"zb" + stem, 1});
    pairs.push_back({"z" + stem, "zb" + stem});
  }
  ChartPtr chart = Chart::create(vars, pairs);
  auto build = [&](int offset) {
    std::vector<std::string> names;
    std::vector<int> weights;
    PolyMat anchor(n, PolyVec(2 * n, Poly(chart)));
    for (int i = 0; i < n; ++i) {
      names.push_back("d_" + chart->name(2 * i + offset));
      weights.push_back(-1);
      anchor[i][2 * i + offset] = Poly::constant(chart, Scalar(1));
    }
    std::vector<std::vector<PolyVec>> structure(
        n, std::vector<PolyVec>(n, PolyVec(n, Poly(chart))));
    return AlgebroidPresentation::create(chart, std::move(names), std::move(weights),
                                         std::move(anchor), std::move(structure));
  };
  return matched_zero_pair(build(0), build(1));
}

namespace {

Section nabla(const Representation& rep, const PresPtr& target, const Section& dir,
              const Section& s) {
  return Section(target, connection_apply(rep, dir, s.coeff));
}

}  // namespace

MatchedReport check_matched(const MatchedPair& mp, int probes, unsigned seed) {
  MatchedReport out;
  const PresPtr& a1 = mp.a1;
  const PresPtr& a2 = mp.a2;
  const ChartPtr& chart = a1->chart();
  int r1 = a1->rank(), r2 = a2->rank(), n = chart->size();

  auto note = [&](bool& flag, const std::string& what) {
    if (!out.witness.empty()) return;
    flag = false;
    out.witness = what;
  };

  // mixed anchor bracket: [a(e_i), b(f_j)] = -a(nabla_{f_j} e_i) + b(nabla_{e_i} f_j)
  for (int i = 0; i < r1; ++i) {
    for (int j = 0; j < r2; ++j) {
      for (int l = 0; l < n; ++l) {
        Poly lhs(chart);
        for (int k = 0; k < n; ++k) {
          if (!a1->anchor(i, k).is_zero())
            lhs += a1->anchor(i, k) * a2->anchor(j, l).pderiv(k);
          if (!a2->anchor(j, k).is_zero())
            lhs -= a2->anchor(j, k) * a1->anchor(i, l).pderiv(k);
        }
        for (int k = 0; k < r1; ++k) {
          const Poly& g = mp.rep21.gamma[j][i][k];
          if (!g.is_zero()) lhs += g * a1->anchor(k, l);
        }
        for (int k = 0; k < r2; ++k) {
          const Poly& g = mp.rep12.gamma[i][j][k];
          if (!g.is_zero()) lhs -= g * a2->anchor(k, l);
        }
        if (!lhs.is_zero()) {
          std::ostringstream os;
          os << "anchor bracket mismatch at (" << a1->gen_name(i) << ", "
             << a2->gen_name(j) << ") component " << chart->name(l);
          note(out.anchors_ok, os.str());
        }
      }
    }
  }

  // nabla_alpha {b1, b2} = {nabla_alpha b1, b2} + {b1, nabla_alpha b2}
  //   + nabla_{nabla_{b2} alpha} b1 - nabla_{nabla_{b1} alpha} b2
  auto mixed = [&](const PresPtr& pa, const PresPtr& pb, const Representation& rab,
                   const Representation& rba, const Section& al, const Section& b1,
                   const Section& b2) {
    Section lhs = nabla(rab, pb, al, bracket_sections(b1, b2));
    Section rhs = bracket_sections(nabla(rab, pb, al, b1), b2) +
                  bracket_sections(b1, nabla(rab, pb, al, b2)) +
                  nabla(rab, pb, nabla(rba, pa, b2, al), b1) -
                  nabla(rab, pb, nabla(rba, pa, b1, al), b2);
    return lhs - rhs;
  };

  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j)
      for (int k = 0; k < r2; ++k) {
        Section d = mixed(a1, a2, mp.rep12, mp.rep21, Section::generator(a1, i),
                          Section::generator(a2, j), Section::generator(a2, k));
        if (!d.is_zero()) {
          std::ostringstream os;
          os << "action of " << a1->gen_name(i) << " on {" << a2->gen_name(j)
             << ", " << a2->gen_name(k) << "} is incompatible";
          note(out.mixed12_ok, os.str());
        }
      }
  for (int i = 0; i < r2; ++i)
    for (int j = 0; j < r1; ++j)
      for (int k = 0; k < r1; ++k) {
        Section d = mixed(a2, a1, mp.rep21, mp.rep12, Section::generator(a2, i),
                          Section::generator(a1, j), Section::generator(a1, k));
        if (!d.is_zero()) {
          std::ostringstream os;
          os << "action of " << a2->gen_name(i) << " on {" << a1->gen_name(j)
             << ", " << a1->gen_name(k) << "} is incompatible";
          note(out.mixed21_ok, os.str());
        }
      }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < probes && out.witness.empty(); ++t) {
    Section al = random_section(a1, rng);
    Section b1 = random_section(a2, rng);
    Section b2 = random_section(a2, rng);
    Section be = random_section(a2, rng);
    Section u1 = random_section(a1, rng);
    Section u2 = random_section(a1, rng);
    if (!mixed(a1, a2, mp.rep12, mp.rep21, al, b1, b2).is_zero())
      note(out.mixed12_ok, "section probe " + std::to_string(t) + " fails the mixed action");
    else if (!mixed(a2, a1, mp.rep21, mp.rep12, be, u1, u2).is_zero())
      note(out.mixed21_ok, "section probe " + std::to_string(t) + " fails the mixed action");
  }

  RepReport f12 = validate_representation(mp.rep12);
  if (!f12.ok()) note(out.flat12_ok, "first connection not flat: " + f12.witness);
  RepReport f21 = validate_representation(mp.rep21);
  if (!f21.ok()) note(out.flat21_ok, "second connection not flat: " + f21.witness);
  return out;
}

PresPtr bowtie(const MatchedPair& mp) {
  const PresPtr& a1 = mp.a1;
  const PresPtr& a2 = mp.a2;
  const ChartPtr& chart = a1->chart();
  int r1 = a1->rank(), r2 = a2->rank(), n = chart->size();
  int r = r1 + r2;
  std::vector<std::string> names;
  std::vector<int> weights;
  for (int i = 0; i < r1; ++i) {
    names.push_back(a1->gen_name(i));
    weights.push_back(a1->gen_weight(i));
  }
  for (int j = 0; j < r2; ++j) {
    names.push_back(a2->gen_name(j));
    weights.push_back(a2->gen_weight(j));
  }
  PolyMat anchor(r, PolyVec(n, Poly(chart)));
  for (int i = 0; i < r1; ++i)
    for (int l = 0; l < n; ++l) anchor[i][l] = a1->anchor(i, l);
  for (int j = 0; j < r2; ++j)
    for (int l = 0; l < n; ++l) anchor[r1 + j][l] = a2->anchor(j, l);
  std::vector<std::vector<PolyVec>> structure(
      r, std::vector<PolyVec>(r, PolyVec(r, Poly(chart))));
  auto put = [&](int i, int j, int k, const Poly& v) {
    structure[i][j][k] = v;
    structure[j][i][k] = Scalar(-1) * v;
  };
  for (int i = 0; i < r1; ++i)
    for (int j = i + 1; j < r1; ++j)
      for (int k = 0; k < r1; ++k) put(i, j, k, a1->bracket(i, j)[k]);
  for (int i = 0; i < r2; ++i)
    for (int j = i + 1; j < r2; ++j)
      for (int k = 0; k < r2; ++k) put(r1 + i, r1 + j, r1 + k, a2->bracket(i, j)[k]);
  // {e_i, f_j} = nabla_{e_i} f_j - nabla_{f_j} e_i
  for (int i = 0; i < r1; ++i)
    for (int j = 0; j < r2; ++j) {
      for (int k = 0; k < r2; ++k) put(i, r1 + j, r1 + k, mp.rep12.gamma[i][j][k]);
      for (int k = 0; k < r1; ++k)
        put(i, r1 + j, k, Scalar(-1) * mp.rep21.gamma[j][i][k]);
    }
  return AlgebroidPresentation::create(chart, std::move(names), std::move(weights),
                                       std::move(anchor), std::move(structure));
}

DoubleComplexSlice double_complex(const MatchedPair& mp, int weight) {
  int r1 = mp.a1->rank(), r2 = mp.a2->rank();
  DoubleComplexSlice dc;
  dc.weight = weight;
  dc.pmax = r1;
  dc.qmax = r2;

  // canonical slice bases come from the row view (a1 tuples outermost)
  std::vector<TwistedComplexModel> row_models;  // one per q
  for (int q = 0; q <= r2; ++q)
    row_models.emplace_back(exterior_power_rep(mp.rep12, q));
  std::vector<std::vector<SliceBasis>> canon(r1 + 2, std::vector<SliceBasis>(r2 + 2));
  for (int q = 0; q <= r2; ++q)
    for (int p = 0; p <= r1 + 1; ++p)
      canon[p][q] = build_slice(row_models[q], p, weight);
  for (int p = 0; p <= r1 + 1; ++p) {
    canon[p][r2 + 1].degree = p;
    canon[p][r2 + 1].weight = weight;
  }

  dc.dims.assign(r1 + 1, std::vector<int>(r2 + 1, 0));
  for (int p = 0; p <= r1; ++p)
    for (int q = 0; q <= r2; ++q) dc.dims[p][q] = canon[p][q].dim();

  dc.d1.assign(r1 + 1, std::vector<ScalarMat>(r2 + 1));
  for (int q = 0; q <= r2; ++q)
    for (int p = 0; p <= r1; ++p)
      dc.d1[p][q] = differential_matrix(row_models[q], canon[p][q], canon[p + 1][q]);

  // column view: assemble over a2 and remap into the canonical order
  dc.d2.assign(r1 + 1, std::vector<ScalarMat>(r2 + 1));
  for (int p = 0; p <= r1; ++p) {
    TwistedComplexModel col_model(exterior_power_rep(mp.rep21, p));
    auto a1_tuples = tuples(r1, p);
    std::vector<SliceBasis> col(r2 + 2);
    for (int q = 0; q <= r2 + 1; ++q) col[q] = build_slice(col_model, q, weight);
    auto to_canon = [&](const SliceBasis& view, const SliceBasis& target) {
      auto a2_tuples = tuples(r2, view.degree);
      std::map<IndexTuple, int> a2_pos;
      for (size_t t = 0; t < a2_tuples.size(); ++t)
        a2_pos[a2_tuples[t]] = static_cast<int>(t);
      std::vector<int> perm(view.dim());
      for (int c = 0; c < view.dim(); ++c) {
        const BasisElement& e = view.elems[c];
        auto key = std::make_tuple(a1_tuples[e.val], a2_pos.at(e.ext), e.mono);
        perm[c] = target.index.at(key);
      }
      return perm;
    };
    for (int q = 0; q <= r2; ++q) {
      if (canon[p][q].dim() != col[q].dim())
        throw StructureError("slice dimension mismatch between the two views");
      ScalarMat M = differential_matrix(col_model, col[q], col[q + 1]);
      auto pd = to_canon(col[q], canon[p][q]);
      auto pc = to_canon(col[q + 1], canon[p][q + 1]);
      ScalarMat out(canon[p][q + 1].dim(), canon[p][q].dim());
      Scalar sign(p % 2 == 0 ? 1 : -1);
      for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j)
          if (!M.at(i, j).is_zero()) out.at(pc[i], pd[j]) = sign * M.at(i, j);
      dc.d2[p][q] = std::move(out);
    }
  }
  return dc;
}

FilteredComplex level_filtration(const DoubleComplexSlice& dc) {
  FilteredComplex fc;
  fc.cx = total_complex(dc);
  int N = dc.pmax + dc.qmax;
  fc.level.assign(N + 1, {});
  for (int k = 0; k <= N; ++k) {
    for (int p = 0; p <= dc.pmax; ++p) {
      int q = k - p;
      if (q < 0 || q > dc.qmax) continue;
      fc.level[k].insert(fc.level[k].end(), dc.dims[p][q], p + k);
    }
  }
  return fc;
}

}  // namespace lalg
