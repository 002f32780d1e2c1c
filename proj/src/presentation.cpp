#include "lalg/presentation.hpp"

#include "lalg/errors.hpp"
#include "lalg/probes.hpp"

#include <random>
#include <sstream>

namespace lalg {

PresPtr AlgebroidPresentation::create(ChartPtr chart, std::vector<std::string> gen_names,
                                      std::vector<int> gen_weights, PolyMat anchor,
                                      std::vector<std::vector<PolyVec>> structure) {
  if (!chart) throw Error("presentation needs a chart");
  auto p = std::shared_ptr<AlgebroidPresentation>(new AlgebroidPresentation());
  int r = static_cast<int>(gen_names.size());
  int n = chart->size();
  if (static_cast<int>(gen_weights.size()) != r) throw StructureError("generator weight count mismatch");
  if (static_cast<int>(anchor.size()) != r) throw StructureError("anchor row count mismatch");
  for (auto& row : anchor)
    if (static_cast<int>(row.size()) != n) throw StructureError("anchor column count mismatch");
  if (static_cast<int>(structure.size()) != r) throw StructureError("structure table shape mismatch");
  for (auto& row : structure) {
    if (static_cast<int>(row.size()) != r) throw StructureError("structure table shape mismatch");
    for (auto& v : row)
      if (static_cast<int>(v.size()) != r) throw StructureError("structure coefficient count mismatch");
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        if (i == j && !structure[i][j][k].is_zero())
          throw StructureError("bracket {e_" + std::to_string(i) + ",e_" + std::to_string(i) +
                               "} must vanish");
        if (structure[i][j][k] != -structure[j][i][k])
          throw StructureError("structure table is not antisymmetric at (" + std::to_string(i) +
                               "," + std::to_string(j) + "," + std::to_string(k) + ")");
      }
  p->chart_ = std::move(chart);
  p->rank_ = r;
  p->gen_names_ = std::move(gen_names);
  p->gen_weights_ = std::move(gen_weights);
  p->anchor_ = std::move(anchor);
  p->structure_ = std::move(structure);
  return p;
}

Poly AlgebroidPresentation::anchor_apply(int i, const Poly& f) const {
  Poly out(chart_);
  for (int j = 0; j < chart_->size(); ++j) {
    if (anchor_[i][j].is_zero()) continue;
    out += anchor_[i][j] * f.pderiv(j);
  }
  return out;
}

Poly AlgebroidPresentation::anchor_apply(const PolyVec& u, const Poly& f) const {
  Poly out(chart_);
  for (int i = 0; i < rank_; ++i) {
    if (u[i].is_zero()) continue;
    out += u[i] * anchor_apply(i, f);
  }
  return out;
}

Section::Section(PresPtr p, PolyVec c) : pres(std::move(p)), coeff(std::move(c)) {
  if (!pres) throw Error("section needs a presentation");
  if (static_cast<int>(coeff.size()) != pres->rank())
    throw Error("section coefficient count mismatch");
}

Section Section::generator(const PresPtr& p, int i) {
  PolyVec c(p->rank());
  c[i] = Poly::constant(p->chart(), Scalar(1));
  return Section(p, std::move(c));
}

Section Section::zero(const PresPtr& p) { return Section(p, PolyVec(p->rank())); }

bool Section::is_zero() const {
  for (auto& f : coeff)
    if (!f.is_zero()) return false;
  return true;
}

std::string Section::str() const {
  std::string out;
  for (int i = 0; i < pres->rank(); ++i) {
    if (coeff[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeff[i].str() + ")*" + pres->gen_name(i);
  }
  return out.empty() ? "0" : out;
}

namespace {
void require_same(const Section& a, const Section& b) {
  if (a.pres != b.pres) throw Error("sections on different presentations");
}
}  // namespace

Section operator+(const Section& a, const Section& b) {
  require_same(a, b);
  PolyVec c(a.coeff);
  for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeff[i];
  return Section(a.pres, std::move(c));
}

Section operator-(const Section& a, const Section& b) {
  require_same(a, b);
  PolyVec c(a.coeff);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeff[i];
  return Section(a.pres, std::move(c));
}

Section operator*(const Poly& f, const Section& s) {
  PolyVec c(s.coeff);
  for (auto& x : c) x = f * x;
  return Section(s.pres, std::move(c));
}

bool operator==(const Section& a, const Section& b) {
  if (a.pres != b.pres) return false;
  for (size_t i = 0; i < a.coeff.size(); ++i)
    if (a.coeff[i] != b.coeff[i]) return false;
  return true;
}

Section bracket_sections(const Section& u, const Section& v) {
  require_same(u, v);
  const auto& p = u.pres;
  int r = p->rank();
  PolyVec out(r);
  for (auto& x : out) x = Poly(p->chart());
  for (int i = 0; i < r; ++i) {
    if (u.coeff[i].is_zero()) continue;
    for (int j = 0; j < r; ++j) {
      if (!v.coeff[j].is_zero()) {
        const PolyVec& c = p->bracket(i, j);
        Poly fg = u.coeff[i] * v.coeff[j];
        for (int k = 0; k < r; ++k)
          if (!c[k].is_zero()) out[k] += fg * c[k];
        // u_i a(e_i)(v_j) e_j
        Poly d = p->anchor_apply(i, v.coeff[j]);
        if (!d.is_zero()) out[j] += u.coeff[i] * d;
      }
    }
  }
  for (int j = 0; j < r; ++j) {
    if (v.coeff[j].is_zero()) continue;
    for (int i = 0; i < r; ++i) {
      Poly d = p->anchor_apply(j, u.coeff[i]);
      if (!d.is_zero()) out[i] -= v.coeff[j] * d;
    }
  }
  return Section(p, std::move(out));
}

AxiomReport validate_presentation(const PresPtr& p, int probes, unsigned seed) {
  AxiomReport rep;
  int r = p->rank();
  int n = p->chart()->size();

  // anchor is a bracket morphism: a({e_i,e_j}) = [a(e_i), a(e_j)]
  for (int i = 0; i < r && rep.anchor_morphism_ok; ++i)
    for (int j = i + 1; j < r && rep.anchor_morphism_ok; ++j) {
      for (int l = 0; l < n; ++l) {
        Poly lhs(p->chart());
        const PolyVec& c = p->bracket(i, j);
        for (int k = 0; k < r; ++k)
          if (!c[k].is_zero()) lhs += c[k] * p->anchor(k, l);
        Poly rhs(p->chart());
        for (int m = 0; m < n; ++m) {
          if (!p->anchor(i, m).is_zero()) rhs += p->anchor(i, m) * p->anchor(j, l).pderiv(m);
          if (!p->anchor(j, m).is_zero()) rhs -= p->anchor(j, m) * p->anchor(i, l).pderiv(m);
        }
        if (lhs != rhs) {
          rep.anchor_morphism_ok = false;
          std::ostringstream os;
          os << "anchor morphism fails on ({" << p->gen_name(i) << "," << p->gen_name(j)
             << "}) component d/d" << p->chart()->name(l) << ": " << lhs.str()
             << " != " << rhs.str();
          rep.witness = os.str();
          break;
        }
      }
    }

  // Jacobi on generator triples
  for (int i = 0; i < r && rep.jacobi_ok; ++i)
    for (int j = i + 1; j < r && rep.jacobi_ok; ++j)
      for (int k = j + 1; k < r && rep.jacobi_ok; ++k) {
        Section ei = Section::generator(p, i);
        Section ej = Section::generator(p, j);
        Section ek = Section::generator(p, k);
        Section jac = bracket_sections(bracket_sections(ei, ej), ek) +
                      bracket_sections(bracket_sections(ej, ek), ei) +
                      bracket_sections(bracket_sections(ek, ei), ej);
        if (!jac.is_zero()) {
          rep.jacobi_ok = false;
          rep.witness = "jacobi fails on (" + p->gen_name(i) + "," + p->gen_name(j) + "," +
                        p->gen_name(k) + "): " + jac.str();
        }
      }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < probes && rep.jacobi_ok; ++t) {
    Section u = random_section(p, rng);
    Section v = random_section(p, rng);
    Section w = random_section(p, rng);
    Section jac = bracket_sections(bracket_sections(u, v), w) +
                  bracket_sections(bracket_sections(v, w), u) +
                  bracket_sections(bracket_sections(w, u), v);
    if (!jac.is_zero()) {
      rep.jacobi_ok = false;
      rep.witness = "jacobi fails on random section probe " + std::to_string(t);
    }
  }

  for (int t = 0; t < probes && rep.leibniz_ok; ++t) {
    Section u = random_section(p, rng);
    Section v = random_section(p, rng);
    Poly f = random_poly(p->chart(), rng, 2);
    Section lhs = bracket_sections(u, f * v);
    Poly a_u_f = p->anchor_apply(u.coeff, f);
    Section rhs = f * bracket_sections(u, v) + a_u_f * v;
    if (!(lhs == rhs)) {
      rep.leibniz_ok = false;
      rep.witness = "leibniz probe " + std::to_string(t) + " fails";
    }
  }

  return rep;
}

WeightReport check_homogeneity(const PresPtr& p) {
  WeightReport rep;
  int r = p->rank();
  int n = p->chart()->size();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < n; ++j) {
      int want = p->gen_weight(i) + p->chart()->weight(j);
      if (!p->anchor(i, j).is_homogeneous_of(want)) {
        rep.ok = false;
        rep.violations.push_back("anchor[" + p->gen_name(i) + "][" + p->chart()->name(j) +
                                 "] not homogeneous of weight " + std::to_string(want) + ": " +
                                 p->anchor(i, j).str());
      }
    }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int k = 0; k < r; ++k) {
        int want = p->gen_weight(i) + p->gen_weight(j) - p->gen_weight(k);
        if (!p->bracket(i, j)[k].is_homogeneous_of(want)) {
          rep.ok = false;
          rep.violations.push_back("bracket {" + p->gen_name(i) + "," + p->gen_name(j) +
                                   "} coefficient of " + p->gen_name(k) +
                                   " not homogeneous of weight " + std::to_string(want) + ": " +
                                   p->bracket(i, j)[k].str());
        }
      }
  return rep;
}

}  // namespace lalg
