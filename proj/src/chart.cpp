#include "lalg/chart.hpp"

#include "lalg/errors.hpp"

#include <cctype>

namespace lalg {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

ChartPtr Chart::create(std::vector<VarSpec> vars) { return create(std::move(vars), {}); }

ChartPtr Chart::create(std::vector<VarSpec> vars,
                       const std::vector<std::pair<std::string, std::string>>& conj_pairs) {
  auto chart = std::shared_ptr<Chart>(new Chart());
  for (auto& v : vars) {
    if (!valid_name(v.name)) throw Error("invalid variable name '" + v.name + "'");
    chart->names_.push_back(v.name);
    chart->weights_.push_back(v.weight);
  }
  int n = chart->size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (chart->names_[i] == chart->names_[j])
        throw Error("duplicate variable name '" + chart->names_[i] + "'");
  chart->conj_.resize(n);
  chart->is_conj_.assign(n, false);
  for (int j = 0; j < n; ++j) chart->conj_[j] = j;
  for (auto& [a, b] : conj_pairs) {
    int ia = chart->index_of(a);
    int ib = chart->index_of(b);
    if (ia < 0 || ib < 0) throw Error("conjugation pair names unknown variable");
    if (ia == ib) throw Error("variable paired with itself: '" + a + "'");
    if (chart->conj_[ia] != ia || chart->conj_[ib] != ib)
      throw Error("variable appears in two conjugation pairs");
    if (chart->weights_[ia] != chart->weights_[ib])
      throw Error("conjugate variables must share a weight: " + a + ", " + b);
    chart->conj_[ia] = ib;
    chart->conj_[ib] = ia;
    chart->is_conj_[ib] = true;
    chart->has_pairs_ = true;
  }
  return chart;
}

ChartPtr Chart::affine(int n, const std::string& stem) {
  std::vector<VarSpec> vars;
  if (n == 1) {
    vars.push_back({stem, 1});
  } else {
    for (int j = 1; j <= n; ++j) vars.push_back({stem + std::to_string(j), 1});
  }
  return create(std::move(vars));
}

int Chart::index_of(std::string_view name) const {
  for (int j = 0; j < size(); ++j)
    if (names_[j] == name) return j;
  return -1;
}

std::string Chart::describe() const {
  std::string out;
  for (int j = 0; j < size(); ++j) {
    if (j) out += " ";
    out += names_[j];
    if (weights_[j] != 1) out += "(" + std::to_string(weights_[j]) + ")";
  }
  return out;
}

}  // namespace lalg
