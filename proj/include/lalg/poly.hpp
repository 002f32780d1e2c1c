#pragma once

#include "lalg/chart.hpp"
#include "lalg/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lalg {

// exponent vector, one entry per chart variable
using Exps = std::vector<int>;

int exps_total(const Exps& e);

// descending graded lexicographic order (canonical term order)
struct MonoCmp {
  bool operator()(const Exps& a, const Exps& b) const {
    int da = exps_total(a), db = exps_total(b);
    if (da != db) return da > db;
    return a > b;
  }
};

// Polynomial over Q(i) on a chart. A default-constructed Poly is the zero
// polynomial with no chart attached; arithmetic adopts the other operand's
// chart. All operations keep terms normalized (no zero coefficients).
class Poly {
 public:
  using TermMap = std::map<Exps, Scalar, MonoCmp>;

  Poly() = default;
  explicit Poly(ChartPtr chart) : chart_(std::move(chart)) {}

  static Poly constant(ChartPtr chart, Scalar c);
  static Poly variable(const ChartPtr& chart, int j);
  static Poly monomial(ChartPtr chart, Exps e, Scalar c);

  bool is_zero() const { return terms_.empty(); }
  const ChartPtr& chart() const { return chart_; }
  const TermMap& terms() const { return terms_; }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  Scalar coeff(const Exps& e) const;
  bool is_constant() const;
  Scalar constant_value() const;  // requires is_constant()

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Scalar& c, Poly p);
  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int k) const;
  Poly pderiv(int j) const;
  Poly conjugate() const;
  Scalar eval(const std::vector<Scalar>& point) const;

  // weighted degree of a monomial under the chart weights
  int mono_weight(const Exps& e) const;
  // nullopt when not homogeneous; the zero polynomial is homogeneous of
  // every weight and reports 0
  std::optional<int> homogeneous_weight() const;
  bool is_homogeneous_of(int w) const;
  // descending weight
  std::vector<std::pair<int, Poly>> homog_components() const;

  std::string str() const;
  static Poly parse(const ChartPtr& chart, std::string_view text);

  void add_term(const Exps& e, const Scalar& c);

 private:
  ChartPtr chart_;
  TermMap terms_;
  void require_chart(const Poly& o);
};

using PolyVec = std::vector<Poly>;
using PolyMat = std::vector<std::vector<Poly>>;

// exact division in the polynomial ring; nullopt when the division leaves
// a remainder
std::optional<Poly> exact_divide(const Poly& num, const Poly& den);

}  // namespace lalg
