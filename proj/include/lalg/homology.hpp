#pragma once

#include "lalg/slices.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace lalg {

// chain of matrices d[k]: C^k -> C^{k+1}; dims has one more entry than d,
// the map out of the top degree is zero
struct MatrixComplex {
  std::vector<int> dims;
  std::vector<ScalarMat> d;
};

// shape coherence and exact d^2 = 0, throws StructureError with a witness
void check_complex(const MatrixComplex& c);

struct BettiTable {
  int weight = 0;
  std::vector<int> dims;
  std::vector<int> ranks;  // rank of d[k]
  std::vector<int> betti;
};

// ranks by sparse fraction-free elimination; check_complex is run first
BettiTable betti(const MatrixComplex& c, int weight_label = 0);

struct SliceComplex {
  int weight = 0;
  std::vector<SliceBasis> bases;
  MatrixComplex cx;
};

SliceComplex build_complex(const ComplexModel& m, int weight);
BettiTable betti(const ComplexModel& m, int weight);

// one weight slice of a double complex; d1[p][q] maps (p,q) to (p+1,q) and
// d2[p][q] maps (p,q) to (p,q+1). d2 is stored with the (-1)^p dressing
// already applied, so d1 d2 + d2 d1 = 0 holds on the stored matrices and
// the total differential is plain blockwise d1 + d2.
struct DoubleComplexSlice {
  int weight = 0;
  int pmax = 0;
  int qmax = 0;
  std::vector<std::vector<int>> dims;        // [p][q]
  std::vector<std::vector<ScalarMat>> d1;    // [p][q], zero-size rows/cols allowed
  std::vector<std::vector<ScalarMat>> d2;
};

struct DoubleReport {
  bool d1_ok = true;
  bool d2_ok = true;
  bool anti_ok = true;
  std::string witness;
  bool ok() const { return d1_ok && d2_ok && anti_ok; }
};

DoubleReport check_double(const DoubleComplexSlice& dc);

// blocks of total degree k ordered by increasing p
MatrixComplex total_complex(const DoubleComplexSlice& dc);

// page dimensions of the column filtration: e0 = raw dims, e1 = vertical
// d2-cohomology, e2 from the map induced by d1 on e1 representatives
struct SpectralResult {
  std::vector<std::vector<int>> e0, e1, e2;  // [p][q]
};

// requires check_double to pass; representatives are extended over the
// vertical boundaries, the induced map is solved exactly in those coordinates
SpectralResult spectral_pages(const DoubleComplexSlice& dc);

// complex with a decreasing filtration F_p = span of basis elements whose
// level is >= p; the differential must respect it (level never decreases)
struct FilteredComplex {
  MatrixComplex cx;
  std::vector<std::vector<int>> level;  // [degree][basis element]
};

struct FilteredPage {
  int r = 0;
  std::map<std::pair<int, int>, int> dims;  // (p, q) -> dim E_r^{p,q}
};

// dim E_r^{p,q} via Z_r^{p,q} = F_p cap D^{-1}(F_{p+r}) and
// dim E_r = dim Z_r - dim(Z_{r-1}^{p+1,q-1} + D Z_{r-1}^{p-r+1,q+r-2})
std::vector<FilteredPage> filtered_pages(const FilteredComplex& fc, int rmax);

}  // namespace lalg
