#pragma once

#include "lalg/exterior.hpp"
#include "lalg/presentation.hpp"

#include <map>

namespace lalg {

// Element of Lambda^p A* (value_dim 1) or Lambda^p A* tensor E* (value_dim
// = module rank). Terms are indexed by strictly increasing generator tuples;
// component b of the value is the evaluation against module generator s_b.
class Cochain {
 public:
  Cochain(PresPtr pres, int degree, int value_dim = 1);

  int degree() const { return degree_; }
  int value_dim() const { return value_dim_; }
  const PresPtr& pres() const { return pres_; }
  const std::map<IndexTuple, PolyVec>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // tuple must be strictly increasing
  void set_term(const IndexTuple& t, PolyVec v);
  // adds c to component comp at the sorted position of t with the Koszul
  // sign of the sort; ignores tuples with repeats
  void add_signed(IndexTuple t, int comp, const Poly& c);
  // evaluation on an arbitrary tuple: Koszul sign, zero on repeats
  PolyVec eval(IndexTuple t) const;
  Poly eval_scalar(const IndexTuple& t) const;  // value_dim 1 shortcut

  // multilinear evaluation on sections (degree-many arguments)
  PolyVec eval_on_sections(const std::vector<Section>& args) const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Poly& f, Cochain x);
  friend bool operator==(const Cochain& a, const Cochain& b);

  std::string str() const;

 private:
  PresPtr pres_;
  int degree_;
  int value_dim_;
  std::map<IndexTuple, PolyVec> terms_;
  void prune(const IndexTuple& t);
};

// Cartan-Eilenberg differential on scalar-valued cochains:
// (d xi)(a_1..a_{p+1}) = sum_i (-1)^{i-1} anchor(a_i)(xi(..hat a_i..))
//                      + sum_{i<j} (-1)^{i+j} xi({a_i,a_j}, ..hat a_i..hat a_j..)
// The bracket argument is placed first, both hatted slots removed (the
// standard Koszul ordering; the sign conventions here are the project-wide
// authority, exercised by the d^2 = 0 property tests).
Cochain cochain_diff(const Cochain& xi);

// shared worker: gamma null for the untwisted case, else one m x m matrix
// per generator acting on the value components
Cochain cochain_diff_impl(const Cochain& xi, const std::vector<PolyMat>* gamma);

// wedge of scalar-valued cochains (shuffle convention, no factorials)
Cochain wedge(const Cochain& a, const Cochain& b);

}  // namespace lalg
