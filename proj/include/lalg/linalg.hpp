#pragma once

#include "lalg/poly.hpp"
#include "lalg/scalar.hpp"

#include <optional>
#include <vector>

namespace lalg {

// dense matrix over Q(i), row major
struct ScalarMat {
  int rows = 0;
  int cols = 0;
  std::vector<Scalar> a;

  ScalarMat() = default;
  ScalarMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Scalar& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Scalar& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  static ScalarMat identity(int n);
  bool is_zero() const;
  friend bool operator==(const ScalarMat&, const ScalarMat&) = default;
};

ScalarMat mat_mul(const ScalarMat& A, const ScalarMat& B);

struct Rref {
  ScalarMat mat;
  std::vector<int> pivots;  // pivot column per pivot row
  int rank = 0;
};

// Gauss-Jordan over Q(i); the dense reference eliminator
Rref rref(ScalarMat M);
int rank_dense(const ScalarMat& M);

// columns form a basis of the kernel
ScalarMat nullspace(const ScalarMat& M);

// solve A x = b exactly; nullopt when inconsistent
std::optional<std::vector<Scalar>> solve(const ScalarMat& A, const std::vector<Scalar>& b);

// concatenate columns [A | B]
ScalarMat hcat(const ScalarMat& A, const ScalarMat& B);

// Independent sparse fraction-free elimination over the Gaussian integers
// (rows cleared of denominators, Bareiss two-term update with exact
// division, fill-reducing pivot choice). Shares no code with rref.
int rank_sparse_ff(const ScalarMat& M);

// fraction-free rank over the polynomial ring (exact division by prior
// pivots); generic rank over the fraction field
int rank_poly_ff(PolyMat M);

}  // namespace lalg
