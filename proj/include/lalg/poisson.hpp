#pragma once

#include "lalg/matched.hpp"
#include "lalg/multivector.hpp"
#include "lalg/slices.hpp"

namespace lalg {

// degree-2 multivector together with its holomorphy flag (no conjugate
// variable appears in a coefficient and no tuple touches a conjugate slot)
struct PoissonBivector {
  Multivector field;
  bool holomorphic = false;

  explicit PoissonBivector(Multivector u);
  // entry p[i][j] of an antisymmetric coefficient matrix, upper triangle read
  static PoissonBivector from_matrix(const ChartPtr& chart, const PolyMat& p);
  // full antisymmetric coefficient matrix, p[i][j] = P(dx_i, dx_j)
  PolyMat matrix() const;
};

struct JacobiReport {
  bool ok = true;
  Multivector witness;  // the trivector bracket when nonzero
};

JacobiReport jacobi_check(const PoissonBivector& p);

// cotangent algebroid: generators dx_i, anchor row i = (P_{i1},...,P_{in}),
// bracket {dx_i, dx_j} = sum_k (d P_{ij}/d x_k) dx_k. Generator weights are
// inferred from the anchor rows (zero rows fall back to the tangent value).
PresPtr cotangent_algebroid(const PoissonBivector& p);

// same on a subset of the variables; every bracket coefficient must stay in
// the span of the chosen generators
PresPtr cotangent_algebroid(const PoissonBivector& p, const std::vector<int>& gens);

// d_P = schouten(P, .)
Multivector lichnerowicz_diff(const PoissonBivector& p, const Multivector& u);

// the split free tangential quotient: variables whose anchor row vanishes
// span the kernel of P sharp; the remaining rows must have full generic
// rank (certified by fraction-free polynomial elimination), and the quotient
// is presented on the complementary generators
struct TangentialModel {
  PresPtr pres;
  std::vector<int> gens;  // variable indices used as generators
};
TangentialModel tangential_algebroid(const PoissonBivector& p);

// multivector complex of P under the canonical identification with the
// cochains of the cotangent algebroid (same basis order, same weights)
class LichnerowiczComplexModel : public ComplexModel {
 public:
  explicit LichnerowiczComplexModel(PoissonBivector p);
  LichnerowiczComplexModel(PoissonBivector p, std::vector<int> gens,
                           std::vector<int> gen_weights);
  const ChartPtr& chart() const override { return p_.field.chart(); }
  int top_degree() const override { return static_cast<int>(gens_.size()); }
  int ext_rank() const override { return static_cast<int>(gens_.size()); }
  int value_dim() const override { return 1; }
  int ext_weight(int i) const override { return weights_[i]; }
  int value_weight(int) const override { return 0; }
  std::map<std::pair<IndexTuple, int>, Poly> apply(int degree,
                                                   const BasisElement& e) const override;

 private:
  PoissonBivector p_;
  std::vector<int> gens_;
  std::vector<int> weights_;
};

// conjugate tensor: coefficients conjugated, indices relabeled through the
// conjugation pairing of the chart
PoissonBivector conjugate_bivector(const PoissonBivector& p);

// matched pair of the cotangent algebroids of a holomorphic P1 (on the
// dz_i) and of the conjugate of a holomorphic P2 (on the dzb_i); the cross
// connections are the Lie derivatives along the anchor images, which vanish
// on coordinate frames. Degenerate tensors are presented tangentially.
MatchedPair skew_pair(const PoissonBivector& p1, const PoissonBivector& p2);

struct BihamiltonianReport {
  bool jacobi1_ok = true;
  bool jacobi2_ok = true;
  bool mixed_ok = true;  // schouten(P1, conj P2) = 0
  Multivector witness;
  bool ok() const { return jacobi1_ok && jacobi2_ok && mixed_ok; }
};

BihamiltonianReport bihamiltonian_check(const PoissonBivector& p1,
                                        const PoissonBivector& p2);

}  // namespace lalg
