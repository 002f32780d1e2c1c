#include "lalg/exterior.hpp"

namespace lalg {

int sort_with_sign(IndexTuple& t) {
  int sign = 1;
  for (size_t i = 1; i < t.size(); ++i) {
    int v = t[i];
    size_t j = i;
    while (j > 0 && t[j - 1] > v) {
      t[j] = t[j - 1];
      --j;
      sign = -sign;
    }
    t[j] = v;
  }
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] == t[i - 1]) return 0;
  return sign;
}

int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple* merged) {
  int sign = 1;
  size_t ia = 0, ib = 0;
  IndexTuple out;
  out.reserve(a.size() + b.size());
  while (ia < a.size() && ib < b.size()) {
    if (a[ia] == b[ib]) return 0;
    if (a[ia] < b[ib]) {
      out.push_back(a[ia++]);
    } else {
      // b[ib] jumps over the remaining entries of a
      if ((a.size() - ia) % 2 == 1) sign = -sign;
      out.push_back(b[ib++]);
    }
  }
  while (ia < a.size()) out.push_back(a[ia++]);
  while (ib < b.size()) out.push_back(b[ib++]);
  if (merged) *merged = std::move(out);
  return sign;
}

std::vector<IndexTuple> tuples(int n, int k) {
  // colex order: tuples with smaller last entry come first
  std::vector<IndexTuple> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  for (int last = k - 1; last < n; ++last)
    for (auto& head : tuples(last, k - 1)) {
      head.push_back(last);
      out.push_back(std::move(head));
    }
  return out;
}

int tuple_weight(const IndexTuple& t, const std::vector<int>& weights) {
  int w = 0;
  for (int i : t) w += weights[i];
  return w;
}

IndexTuple tuple_erase(const IndexTuple& t, int pos) {
  IndexTuple out;
  out.reserve(t.size() - 1);
  for (size_t i = 0; i < t.size(); ++i)
    if (static_cast<int>(i) != pos) out.push_back(t[i]);
  return out;
}

}  // namespace lalg
