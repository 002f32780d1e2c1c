#pragma once

#include "lalg/exterior.hpp"
#include "lalg/poly.hpp"

#include <map>

namespace lalg {

// polynomial multivector field: coefficients of d_{x_{i_1}} ^ ... ^ d_{x_{i_p}}
// against strictly increasing tuples of variable indices
class Multivector {
 public:
  Multivector() = default;  // chartless zero
  Multivector(ChartPtr chart, int degree);

  static Multivector function(const Poly& f);
  // coefficient * d_{x_{i_1}} ^ ... with an already increasing tuple
  static Multivector term(const ChartPtr& chart, IndexTuple t, Poly coeff);

  int degree() const { return degree_; }
  const ChartPtr& chart() const { return chart_; }
  const std::map<IndexTuple, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Poly coeff(const IndexTuple& t) const;

  // adds with the Koszul sign of sorting t; repeats are dropped
  void add_signed(IndexTuple t, const Poly& c);

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(const Poly& f, Multivector u);
  friend Multivector operator*(const Scalar& s, Multivector u);
  friend bool operator==(const Multivector& a, const Multivector& b);

  std::string str() const;

 private:
  ChartPtr chart_;
  int degree_ = 0;
  std::map<IndexTuple, Poly> terms_;
};

Multivector wedge(const Multivector& a, const Multivector& b);

// Schouten bracket on the coordinate frame, degree |u| + |v| - 1;
// extends the vector field bracket and the directional derivative
// (a vector field against a function gives the derivative)
Multivector schouten(const Multivector& u, const Multivector& v);

// coefficient conjugation combined with the conjugate-variable relabeling of
// the tuple indices (charts with conjugation pairs)
Multivector conjugate_multivector(const Multivector& u);

}  // namespace lalg
