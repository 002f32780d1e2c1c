#include "lalg/poisson.hpp"

#include "lalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lalg {

namespace {

bool touches_conjugate(const ChartPtr& chart, const IndexTuple& t, const Poly& coeff) {
  for (int i : t)
    if (chart->is_conjugate_var(i)) return true;
  for (const auto& [mono, s] : coeff.terms()) {
    (void)s;
    for (int j = 0; j < chart->size(); ++j)
      if (mono[j] > 0 && chart->is_conjugate_var(j)) return true;
  }
  return false;
}

}  // namespace

PoissonBivector::PoissonBivector(Multivector u) : field(std::move(u)) {
  if (!field.chart()) throw Error("bivector needs a chart");
  if (field.degree() != 2) throw Error("bivector must have degree 2");
  holomorphic = true;
  for (const auto& [t, c] : field.terms())
    if (touches_conjugate(field.chart(), t, c)) {
      holomorphic = false;
      break;
    }
}

PoissonBivector PoissonBivector::from_matrix(const ChartPtr& chart, const PolyMat& p) {
  int n = chart->size();
  if (static_cast<int>(p.size()) != n) throw Error("coefficient matrix shape");
  Multivector u(chart, 2);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(p[i].size()) != n) throw Error("coefficient matrix shape");
    if (!p[i][i].is_zero()) throw Error("coefficient matrix must have zero diagonal");
    for (int j = i + 1; j < n; ++j) {
      if (!(p[i][j] + p[j][i]).is_zero())
        throw Error("coefficient matrix must be antisymmetric");
      u.add_signed({i, j}, p[i][j]);
    }
  }
  return PoissonBivector(std::move(u));
}

PolyMat PoissonBivector::matrix() const {
  const ChartPtr& chart = field.chart();
  int n = chart->size();
  PolyMat p(n, PolyVec(n, Poly(chart)));
  for (const auto& [t, c] : field.terms()) {
    p[t[0]][t[1]] = c;
    p[t[1]][t[0]] = Scalar(-1) * c;
  }
  return p;
}

JacobiReport jacobi_check(const PoissonBivector& p) {
  JacobiReport out;
  out.witness = schouten(p.field, p.field);
  out.ok = out.witness.is_zero();
  return out;
}

namespace {

std::vector<int> infer_weights(const ChartPtr& chart, const PolyMat& p,
                               const std::vector<int>& gens) {
  std::vector<int> w;
  for (int i : gens) {
    int wi = -chart->weight(i);
    for (int j = 0; j < chart->size(); ++j) {
      if (p[i][j].is_zero()) continue;
      auto hw = p[i][j].homogeneous_weight();
      if (!hw) throw StructureError("coefficient entry is not weight homogeneous");
      wi = *hw - chart->weight(j);
      break;
    }
    w.push_back(wi);
  }
  return w;
}

PresPtr cotangent_on(const PoissonBivector& pb, const std::vector<int>& gens) {
  const ChartPtr& chart = pb.field.chart();
  int n = chart->size();
  int r = static_cast<int>(gens.size());
  JacobiReport jac = jacobi_check(pb);
  if (!jac.ok) throw StructureError("bivector fails the Jacobi identity");
  PolyMat p = pb.matrix();
  std::vector<int> inv(n, -1);
  for (int a = 0; a < r; ++a) {
    if (gens[a] < 0 || gens[a] >= n) throw Error("generator index out of range");
    inv[gens[a]] = a;
  }
  std::vector<std::string> names;
  for (int i : gens) names.push_back("d" + chart->name(i));
  std::vector<int> weights = infer_weights(chart, p, gens);
  PolyMat anchor(r, PolyVec(n, Poly(chart)));
  for (int a = 0; a < r; ++a)
    for (int j = 0; j < n; ++j) anchor[a][j] = p[gens[a]][j];
  std::vector<std::vector<PolyVec>> structure(
      r, std::vector<PolyVec>(r, PolyVec(r, Poly(chart))));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      const Poly& pij = p[gens[a]][gens[b]];
      for (int k = 0; k < n; ++k) {
        Poly d = pij.pderiv(k);
        if (d.is_zero()) continue;
        if (inv[k] < 0) {
          std::ostringstream os;
          os << "bracket {" << names[a] << ", " << names[b]
             << "} leaves the generator span along " << chart->name(k);
          throw StructureError(os.str());
        }
        structure[a][b][inv[k]] = std::move(d);
      }
    }
  return AlgebroidPresentation::create(chart, std::move(names), std::move(weights),
                                       std::move(anchor), std::move(structure));
}

}  // namespace

PresPtr cotangent_algebroid(const PoissonBivector& p) {
  std::vector<int> gens(p.field.chart()->size());
  for (size_t i = 0; i < gens.size(); ++i) gens[i] = static_cast<int>(i);
  return cotangent_on(p, gens);
}

PresPtr cotangent_algebroid(const PoissonBivector& p, const std::vector<int>& gens) {
  return cotangent_on(p, gens);
}

Multivector lichnerowicz_diff(const PoissonBivector& p, const Multivector& u) {
  return schouten(p.field, u);
}

TangentialModel tangential_algebroid(const PoissonBivector& p) {
  const ChartPtr& chart = p.field.chart();
  int n = chart->size();
  PolyMat m = p.matrix();
  TangentialModel out;
  for (int i = 0; i < n; ++i) {
    bool zero = true;
    for (int j = 0; j < n; ++j)
      if (!m[i][j].is_zero()) zero = false;
    if (!zero) out.gens.push_back(i);
  }
  PolyMat active(out.gens.size());
  for (size_t a = 0; a < out.gens.size(); ++a) active[a] = m[out.gens[a]];
  if (rank_poly_ff(active) != static_cast<int>(out.gens.size()))
    throw StructureError(
        "kernel of the anchor is not spanned by coordinate differentials");
  out.pres = cotangent_on(p, out.gens);
  return out;
}

LichnerowiczComplexModel::LichnerowiczComplexModel(PoissonBivector p)
    : p_(std::move(p)) {
  int n = p_.field.chart()->size();
  for (int i = 0; i < n; ++i) gens_.push_back(i);
  weights_ = infer_weights(p_.field.chart(), p_.matrix(), gens_);
}

LichnerowiczComplexModel::LichnerowiczComplexModel(PoissonBivector p,
                                                   std::vector<int> gens,
                                                   std::vector<int> gen_weights)
    : p_(std::move(p)), gens_(std::move(gens)), weights_(std::move(gen_weights)) {
  if (gens_.size() != weights_.size()) throw Error("one weight per generator expected");
}

std::map<std::pair<IndexTuple, int>, Poly> LichnerowiczComplexModel::apply(
    int degree, const BasisElement& e) const {
  const ChartPtr& chart = p_.field.chart();
  IndexTuple vars;
  for (int i : e.ext) vars.push_back(gens_[i]);
  Multivector u = Multivector::term(chart, vars, Poly::monomial(chart, e.mono, Scalar(1)));
  (void)degree;
  Multivector du = lichnerowicz_diff(p_, u);
  std::map<int, int> inv;
  for (size_t a = 0; a < gens_.size(); ++a) inv[gens_[a]] = static_cast<int>(a);
  std::map<std::pair<IndexTuple, int>, Poly> out;
  for (const auto& [t, c] : du.terms()) {
    IndexTuple mapped;
    for (int i : t) {
      auto it = inv.find(i);
      if (it == inv.end())
        throw StructureError("differential leaves the generator span");
      mapped.push_back(it->second);
    }
    out[{mapped, 0}] = c;
  }
  return out;
}

PoissonBivector conjugate_bivector(const PoissonBivector& p) {
  return PoissonBivector(conjugate_multivector(p.field));
}

MatchedPair skew_pair(const PoissonBivector& p1, const PoissonBivector& p2) {
  const ChartPtr& chart = p1.field.chart();
  if (chart != p2.field.chart()) throw ChartMismatchError("tensors on different charts");
  if (!chart->has_pairs())
    throw Error("skew pair needs a chart with conjugation pairs");
  if (!p1.holomorphic || !p2.holomorphic)
    throw Error("skew pair needs holomorphic tensors");
  PoissonBivector q2 = conjugate_bivector(p2);
  TangentialModel t1 = tangential_algebroid(p1);
  TangentialModel t2 = tangential_algebroid(q2);
  const PresPtr& a1 = t1.pres;
  const PresPtr& a2 = t2.pres;

  // cross connections as Lie derivatives of the coordinate frames along the
  // anchor images: L_X d x_j = d(X(x_j)), expanded over the partner span
  auto lie_rows = [&](const PresPtr& src, const PresPtr& dst,
                      const std::vector<int>& dst_gens) {
    std::vector<PolyMat> g(src->rank(),
                           PolyMat(dst->rank(), PolyVec(dst->rank(), Poly(chart))));
    std::map<int, int> inv;
    for (size_t a = 0; a < dst_gens.size(); ++a) inv[dst_gens[a]] = static_cast<int>(a);
    for (int i = 0; i < src->rank(); ++i)
      for (int j = 0; j < dst->rank(); ++j) {
        // X = anchor(src_i); X(x_{dst_j}) is the matching anchor component
        const Poly& comp = src->anchor(i, dst_gens[j]);
        for (int k = 0; k < chart->size(); ++k) {
          Poly d = comp.pderiv(k);
          if (d.is_zero()) continue;
          auto it = inv.find(k);
          if (it == inv.end())
            throw StructureError("cross connection leaves the generator span");
          g[i][j][it->second] = std::move(d);
        }
      }
    return g;
  };
  return make_matched(a1, a2, lie_rows(a1, a2, t2.gens), lie_rows(a2, a1, t1.gens));
}

BihamiltonianReport bihamiltonian_check(const PoissonBivector& p1,
                                        const PoissonBivector& p2) {
  BihamiltonianReport out;
  out.jacobi1_ok = jacobi_check(p1).ok;
  out.jacobi2_ok = jacobi_check(p2).ok;
  PoissonBivector q2 = conjugate_bivector(p2);
  out.witness = schouten(p1.field, q2.field);
  out.mixed_ok = out.witness.is_zero();
  return out;
}

}  // namespace lalg
