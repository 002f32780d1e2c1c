#pragma once

#include "lalg/homology.hpp"

namespace lalg {

// two presentations over one chart tied by mutual flat connections:
// rep12 lets the first algebra act on the generators of the second,
// rep21 the other way around
struct MatchedPair {
  PresPtr a1;
  PresPtr a2;
  Representation rep12;
  Representation rep21;
};

// gamma12[i] is the matrix of the action of the i-th generator of a1 on the
// generators of a2 (rows = source generator), gamma21 symmetrically
MatchedPair make_matched(const PresPtr& a1, const PresPtr& a2,
                         std::vector<PolyMat> gamma12, std::vector<PolyMat> gamma21);

// both connections zero
MatchedPair matched_zero_pair(const PresPtr& a1, const PresPtr& a2);

// holomorphic and antiholomorphic halves of the tangent model on a chart
// with n conjugate variable pairs z_i, zb_i
MatchedPair tangent_pair(int n);

struct MatchedReport {
  bool anchors_ok = true;     // mixed bracket of the anchor images
  bool mixed12_ok = true;     // action of a1 on brackets of a2
  bool mixed21_ok = true;     // action of a2 on brackets of a1
  bool flat12_ok = true;
  bool flat21_ok = true;
  std::string witness;
  bool ok() const {
    return anchors_ok && mixed12_ok && mixed21_ok && flat12_ok && flat21_ok;
  }
};

// exact generator checks of the compatibility equations plus seeded random
// section probes, and flatness of both connections
MatchedReport check_matched(const MatchedPair& mp, int probes = 10, unsigned seed = 34567);

// the sum presentation on a1 + a2: anchor rows concatenated, pure brackets
// kept, mixed bracket {e_i, f_j} = nabla_{e_i} f_j - nabla_{f_j} e_i
PresPtr bowtie(const MatchedPair& mp);

// one weight slice of the bigraded complex: d1 from the differential of a1
// twisted by the exterior powers of rep12, d2 from a2 and rep21, stored
// with the (-1)^p dressing so the blocks anticommute when the pair is
// matched. Basis order of a block is column tuples of a1 outermost, then
// the a2 tuple, then the monomial.
DoubleComplexSlice double_complex(const MatchedPair& mp, int weight);

// total complex with the level of a block (p, q) in total degree k set to
// p + k, a filtration the total differential never lowers
FilteredComplex level_filtration(const DoubleComplexSlice& dc);

}  // namespace lalg
