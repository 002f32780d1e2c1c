#pragma once

#include "lalg/cochain.hpp"
#include "lalg/presentation.hpp"

namespace lalg {

// Flat connection on a free module of rank m over the same chart:
// nabla_{e_i} s_a = sum_b gamma[i][a][b] s_b. val_weights grade the module
// generators; gamma[i][a][b] must be homogeneous of weight
// gen_weight(i) + val_weights[a] - val_weights[b].
struct Representation {
  PresPtr pres;
  int rank = 0;
  std::vector<int> val_weights;
  std::vector<PolyMat> gamma;  // one rank x rank matrix per generator

  static Representation trivial(const PresPtr& p);
  // connection matrices and optional weights (default all zero)
  static Representation create(const PresPtr& p, std::vector<PolyMat> gamma,
                               std::vector<int> val_weights = {});
};

// dual module: gamma* = -gamma^T per generator, weights negated
Representation dual_rep(const Representation& rep);

// q-th exterior power, derivation extension of the connection; module
// generators are the strictly increasing q-tuples in tuples() order
Representation exterior_power_rep(const Representation& rep, int q);

struct RepReport {
  bool shapes_ok = true;
  bool flat_ok = true;
  std::string witness;
  bool ok() const { return shapes_ok && flat_ok; }
};

// Exact curvature check on generator pairs,
//   a_i(gamma_j) - a_j(gamma_i) + gamma_j gamma_i - gamma_i gamma_j
//     = sum_k c[i][j][k] gamma_k,
// plus seeded section probes of nabla_u nabla_v - nabla_v nabla_u - nabla_{u,v}.
RepReport validate_representation(const Representation& rep, int probes = 6,
                                  unsigned seed = 23456);

// nabla of a module element (coefficient vector) along a section
PolyVec connection_apply(const Representation& rep, const Section& u, const PolyVec& s);

// differential twisted by the representation; xi takes values in the dual
// module (components against the s_b), value_dim must equal rep.rank
Cochain twisted_diff(const Representation& rep, const Cochain& xi);

}  // namespace lalg
