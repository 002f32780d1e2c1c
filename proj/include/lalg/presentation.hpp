#pragma once

#include "lalg/chart.hpp"
#include "lalg/exterior.hpp"
#include "lalg/poly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace lalg {

class AlgebroidPresentation;
using PresPtr = std::shared_ptr<const AlgebroidPresentation>;

// Algebroid presentation on a free module over a polynomial chart: rank r,
// anchor matrix (r x n, rows = generator images as vector fields) and
// antisymmetric bracket table {e_i, e_j} = sum_k c[i][j][k] e_k.
class AlgebroidPresentation {
 public:
  static PresPtr create(ChartPtr chart, std::vector<std::string> gen_names,
                        std::vector<int> gen_weights, PolyMat anchor,
                        std::vector<std::vector<PolyVec>> structure);

  int rank() const { return rank_; }
  const ChartPtr& chart() const { return chart_; }
  const std::string& gen_name(int i) const { return gen_names_[i]; }
  const std::vector<int>& gen_weights() const { return gen_weights_; }
  int gen_weight(int i) const { return gen_weights_[i]; }
  const Poly& anchor(int i, int j) const { return anchor_[i][j]; }
  const PolyMat& anchor_matrix() const { return anchor_; }
  // coefficients of {e_i, e_j}
  const PolyVec& bracket(int i, int j) const { return structure_[i][j]; }

  // the derivation a(e_i) applied to f
  Poly anchor_apply(int i, const Poly& f) const;
  // a(sum u_i e_i) applied to f
  Poly anchor_apply(const PolyVec& u, const Poly& f) const;

 private:
  AlgebroidPresentation() = default;
  ChartPtr chart_;
  int rank_ = 0;
  std::vector<std::string> gen_names_;
  std::vector<int> gen_weights_;
  PolyMat anchor_;
  std::vector<std::vector<PolyVec>> structure_;
};

// section of the free module, coefficient vector against the generators
struct Section {
  PresPtr pres;
  PolyVec coeff;

  Section() = default;
  Section(PresPtr p, PolyVec c);
  static Section generator(const PresPtr& p, int i);
  static Section zero(const PresPtr& p);
  bool is_zero() const;
  std::string str() const;
};

Section operator+(const Section& a, const Section& b);
Section operator-(const Section& a, const Section& b);
Section operator*(const Poly& f, const Section& s);
bool operator==(const Section& a, const Section& b);

// Leibniz-rule extension of the generator bracket to arbitrary sections
Section bracket_sections(const Section& u, const Section& v);

struct AxiomReport {
  bool antisymmetry_ok = true;   // structural, rechecked
  bool anchor_morphism_ok = true;
  bool jacobi_ok = true;
  bool leibniz_ok = true;
  std::string witness;  // first failure, human readable
  bool ok() const { return antisymmetry_ok && anchor_morphism_ok && jacobi_ok && leibniz_ok; }
};

// Exact anchor-morphism and generator-triple Jacobi checks, plus seeded
// random section probes for the Leibniz extension.
AxiomReport validate_presentation(const PresPtr& p, int probes = 8, unsigned seed = 12345);

struct WeightReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Grading contract: anchor[i][j] must be homogeneous of weight
// gen_weight(i) + var_weight(j) and c[i][j][k] homogeneous of weight
// gen_weight(i) + gen_weight(j) - gen_weight(k); then the differential
// preserves the total weight of cochains.
WeightReport check_homogeneity(const PresPtr& p);

}  // namespace lalg
