#pragma once

#include "lalg/linalg.hpp"
#include "lalg/representation.hpp"

#include <map>
#include <utility>

namespace lalg {

// exponent vectors of weight w; requires every variable weight positive so
// the enumeration is finite (the empty chart has only the empty monomial,
// at weight 0)
std::vector<Exps> monomials_of_weight(const ChartPtr& chart, int w);

// one basis cochain of a weight slice: monomial coefficient attached to an
// exterior tuple and a value component
struct BasisElement {
  IndexTuple ext;
  int val = 0;
  Exps mono;
};

// A cochain complex whose slices the matrix builder can enumerate. The
// coefficient of a degree-p basis element in the weight-w slice is a
// monomial of weight w + sum_{i in ext} ext_weight(i) + value_weight(val).
class ComplexModel {
 public:
  virtual ~ComplexModel() = default;
  virtual const ChartPtr& chart() const = 0;
  virtual int top_degree() const = 0;
  virtual int ext_rank() const = 0;
  virtual int value_dim() const = 0;
  virtual int ext_weight(int i) const = 0;
  virtual int value_weight(int b) const = 0;
  // differential of the basis cochain, coefficients per target (tuple, component)
  virtual std::map<std::pair<IndexTuple, int>, Poly> apply(int degree,
                                                           const BasisElement& e) const = 0;
};

struct SliceBasis {
  int degree = 0;
  int weight = 0;
  std::vector<BasisElement> elems;
  // (ext, val, mono) -> position in elems
  std::map<std::tuple<IndexTuple, int, Exps>, int> index;
  int dim() const { return static_cast<int>(elems.size()); }
};

SliceBasis build_slice(const ComplexModel& m, int degree, int weight);

// matrix of the differential from dom to cod (cod.degree = dom.degree + 1,
// same weight); a coefficient landing outside cod is a grading violation
// and throws StructureError
ScalarMat differential_matrix(const ComplexModel& m, const SliceBasis& dom,
                              const SliceBasis& cod);

// untwisted scalar complex of a presentation
class ScalarComplexModel : public ComplexModel {
 public:
  explicit ScalarComplexModel(PresPtr pres) : pres_(std::move(pres)) {}
  const ChartPtr& chart() const override { return pres_->chart(); }
  int top_degree() const override { return pres_->rank(); }
  int ext_rank() const override { return pres_->rank(); }
  int value_dim() const override { return 1; }
  int ext_weight(int i) const override { return pres_->gen_weight(i); }
  int value_weight(int) const override { return 0; }
  std::map<std::pair<IndexTuple, int>, Poly> apply(int degree,
                                                   const BasisElement& e) const override;

 private:
  PresPtr pres_;
};

// complex twisted by a representation; values are stored against the duals
// of the module generators
class TwistedComplexModel : public ComplexModel {
 public:
  explicit TwistedComplexModel(Representation rep) : rep_(std::move(rep)) {}
  const ChartPtr& chart() const override { return rep_.pres->chart(); }
  int top_degree() const override { return rep_.pres->rank(); }
  int ext_rank() const override { return rep_.pres->rank(); }
  int value_dim() const override { return rep_.rank; }
  int ext_weight(int i) const override { return rep_.pres->gen_weight(i); }
  int value_weight(int b) const override { return rep_.val_weights[b]; }
  const Representation& rep() const { return rep_; }
  std::map<std::pair<IndexTuple, int>, Poly> apply(int degree,
                                                   const BasisElement& e) const override;

 private:
  Representation rep_;
};

}  // namespace lalg
