#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lalg {

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

struct VarSpec {
  std::string name;
  int weight = 1;
};

// Polynomial chart: named variables with integer weights and a conjugation
// involution on the variable set. Unpaired variables are fixed points
// (real variables). Charts are shared immutable objects; polynomial
// operations require operands on the same chart instance.
class Chart {
 public:
  static ChartPtr create(std::vector<VarSpec> vars);
  static ChartPtr create(std::vector<VarSpec> vars,
                         const std::vector<std::pair<std::string, std::string>>& conj_pairs);
  // convenience: n self-conjugate weight-1 variables x1..xn
  static ChartPtr affine(int n, const std::string& stem = "x");

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int j) const { return names_[j]; }
  int weight(int j) const { return weights_[j]; }
  int conj(int j) const { return conj_[j]; }
  bool self_conjugate(int j) const { return conj_[j] == j; }
  bool has_pairs() const { return has_pairs_; }
  // true for the second member of each declared pair
  bool is_conjugate_var(int j) const { return is_conj_[j]; }
  int index_of(std::string_view name) const;  // -1 when absent
  std::string describe() const;

 private:
  Chart() = default;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<int> conj_;
  std::vector<bool> is_conj_;
  bool has_pairs_ = false;
};

}  // namespace lalg
