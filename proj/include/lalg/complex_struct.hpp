#pragma once

#include "lalg/cochain.hpp"
#include "lalg/homology.hpp"
#include "lalg/linalg.hpp"
#include "lalg/presentation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace lalg {

// Almost complex structure on an algebroid: an endomorphism J of the
// generator bundle with J^2 = -1 together with a base endomorphism that
// intertwines the anchor. Rows act on the right of coordinate rows, so
// J(e_i) = sum_j j[i][j] e_j and likewise for jm on coordinate fields.
struct AlmostComplexStructure {
  PresPtr pres;
  PolyMat j;   // r x r
  PolyMat jm;  // n x n

  // checks shapes and rejects odd rank
  static AlmostComplexStructure create(PresPtr pres, PolyMat j, PolyMat jm);
};

struct AcsReport {
  bool square_ok = true;   // J^2 = -identity
  bool anchor_ok = true;   // anchor . jm = j . anchor
  bool weights_ok = true;  // entries homogeneous of the frame weight gap
  std::string witness;
  bool ok() const { return square_ok && anchor_ok && weights_ok; }
};

AcsReport validate_acs(const AlmostComplexStructure& s);

// eigenframes of the complexified bundle, +i part first
struct SplitFrames {
  std::vector<Section> holo;
  std::vector<Section> anti;
  ScalarMat frame;  // rows: holo frame then anti frame, original coordinates
};

// applies the projectors (1 -+ iJ)/2 over the scalar field; needs constant J
SplitFrames split_complexified(const AlmostComplexStructure& s);

// presentation in a new constant frame f_i = sum_j t[i][j] e_j; t invertible,
// each row must mix generators of one weight only
PresPtr change_frame(const PresPtr& p, const ScalarMat& t,
                     std::vector<std::string> names);

// the algebroid rewritten in the eigenframes: +i generators first
struct SplitPresentation {
  PresPtr pres;
  int holo = 0;  // generators 0..holo-1 carry bidegree (1,0)
};

SplitPresentation split_presentation(const AlmostComplexStructure& s);

struct NijenhuisReport {
  bool ok = true;
  // one entry per generator pair i < j, in lex order
  std::vector<std::tuple<int, int, Section>> values;
  std::string witness;
};

// torsion N(a,b) = {Ja,Jb} - J{Ja,b} - J{a,Jb} - {a,b} on generator pairs
NijenhuisReport nijenhuis(const AlmostComplexStructure& s);

// cochain on a split presentation whose terms all have exterior bidegree
// (p, q) = (count of +i frame indices, count of -i frame indices)
struct BigradedCochain {
  int p = 0;
  int q = 0;
  Cochain terms;
};

// the four bidegree components of the differential on a split presentation
enum class DComponent { holo2, holo, anti, anti2 };

// accepts d', d, dbar, d''
DComponent component_from_name(const std::string& name);

std::pair<int, int> bidegree_of(const SplitPresentation& sp, const IndexTuple& t);

// terms of xi with exterior bidegree (p, q)
Cochain project_bidegree(const SplitPresentation& sp, const Cochain& xi, int p,
                         int q);

// applies the differential to a pure-bidegree cochain and keeps the component
// shifting (p,q) by (+2,-1), (+1,0), (0,+1) or (-1,+2)
BigradedCochain bidegree_split(const SplitPresentation& sp, const Cochain& xi,
                               DComponent c);

// scalar complex of the split presentation at one weight, filtered by
// level = holomorphic index count + degree
FilteredComplex filtration_slices(const SplitPresentation& sp, int weight);
FilteredComplex filtration_slices(const AlmostComplexStructure& s, int weight);

}  // namespace lalg
