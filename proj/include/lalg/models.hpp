#pragma once

#include "lalg/presentation.hpp"

namespace lalg {

// tangent algebroid on an existing chart: anchor identity, zero brackets,
// generator weights -weight(x_j)
PresPtr tangent_algebroid(const ChartPtr& chart);
// convenience: fresh affine chart x1..xn (or x for n = 1)
PresPtr tangent_algebroid(int n);

// Lie algebra as an algebroid over a point: empty chart, zero anchor,
// constant structure table c[i][j][k], generator weights all zero
PresPtr lie_algebra_point(const std::vector<std::vector<std::vector<Scalar>>>& c,
                          std::vector<std::string> names = {});

struct FoliationModel {
  PresPtr pres;
  int leaf_dim = 0;  // generators are d/dz_1 .. d/dz_m, the first m variables
};

// foliation model on a chart whose first m variables are leaf coordinates
FoliationModel foliation_algebroid(const ChartPtr& chart, int m);
// convenience: chart z1..zm, y1..y_{n-m}
FoliationModel foliation_algebroid(int m, int n);

// structure constants of common point algebras, used by fixtures
PresPtr sl2_point();
PresPtr heisenberg3_point();
PresPtr abelian_point(int rank);

}  // namespace lalg
