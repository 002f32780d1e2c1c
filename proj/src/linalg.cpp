#include "lalg/linalg.hpp"

#include "lalg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace lalg {

ScalarMat ScalarMat::identity(int n) {
  ScalarMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

bool ScalarMat::is_zero() const {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

ScalarMat mat_mul(const ScalarMat& A, const ScalarMat& B) {
  if (A.cols != B.rows) throw Error("matrix shape mismatch in product");
  ScalarMat C(A.rows, B.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      const Scalar& aik = A.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < B.cols; ++j) {
        const Scalar& bkj = B.at(k, j);
        if (!bkj.is_zero()) C.at(i, j) += aik * bkj;
      }
    }
  return C;
}

Rref rref(ScalarMat M) {
  Rref out;
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int p = -1;
    for (int i = r; i < M.rows; ++i)
      if (!M.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(p, j), M.at(r, j));
    Scalar inv = M.at(r, c).inverse();
    for (int j = c; j < M.cols; ++j) M.at(r, j) *= inv;
    for (int i = 0; i < M.rows; ++i) {
      if (i == r) continue;
      Scalar f = M.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < M.cols; ++j) M.at(i, j) -= f * M.at(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.mat = std::move(M);
  return out;
}

int rank_dense(const ScalarMat& M) { return rref(M).rank; }

ScalarMat nullspace(const ScalarMat& M) {
  Rref R = rref(M);
  std::vector<bool> is_pivot(M.cols, false);
  for (int c : R.pivots) is_pivot[c] = true;
  int free_count = M.cols - R.rank;
  ScalarMat K(M.cols, free_count);
  int col = 0;
  for (int f = 0; f < M.cols; ++f) {
    if (is_pivot[f]) continue;
    K.at(f, col) = Scalar(1);
    for (int pr = 0; pr < R.rank; ++pr) K.at(R.pivots[pr], col) = -R.mat.at(pr, f);
    ++col;
  }
  return K;
}

std::optional<std::vector<Scalar>> solve(const ScalarMat& A, const std::vector<Scalar>& b) {
  if (static_cast<int>(b.size()) != A.rows) throw Error("rhs size mismatch");
  ScalarMat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols) = b[i];
  }
  Rref R = rref(std::move(aug));
  std::vector<Scalar> x(A.cols, Scalar(0));
  for (int pr = 0; pr < R.rank; ++pr) {
    if (R.pivots[pr] == A.cols) return std::nullopt;  // inconsistent
    x[R.pivots[pr]] = R.mat.at(pr, A.cols);
  }
  return x;
}

ScalarMat hcat(const ScalarMat& A, const ScalarMat& B) {
  if (A.rows != B.rows) throw Error("hcat row mismatch");
  ScalarMat C(A.rows, A.cols + B.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

namespace {

// Gaussian integer for the fraction-free route
struct GInt {
  Int re, im;
  bool is_zero() const { return re == 0 && im == 0; }
};

GInt gmul(const GInt& a, const GInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GInt gsub(const GInt& a, const GInt& b) { return {a.re - b.re, a.im - b.im}; }

// exact division, aborts when the quotient is not a Gaussian integer
GInt gdiv_exact(const GInt& a, const GInt& b) {
  Int n = b.re * b.re + b.im * b.im;
  if (n == 0) throw Error("fraction-free division by zero");
  GInt num = gmul(a, {b.re, -b.im});
  Int qr, rr, qi, ri;
  boost::multiprecision::divide_qr(num.re, n, qr, rr);
  boost::multiprecision::divide_qr(num.im, n, qi, ri);
  if (rr != 0 || ri != 0) throw Error("fraction-free division was not exact");
  return {qr, qi};
}

using SpRow = std::vector<std::pair<int, GInt>>;  // sorted by column

// c1*r1 + c2*r2 over sorted sparse rows
SpRow row_comb(const GInt& c1, const SpRow& r1, const GInt& c2, const SpRow& r2) {
  SpRow out;
  out.reserve(r1.size() + r2.size());
  size_t i = 0, j = 0;
  while (i < r1.size() || j < r2.size()) {
    if (j >= r2.size() || (i < r1.size() && r1[i].first < r2[j].first)) {
      GInt v = gmul(c1, r1[i].second);
      if (!v.is_zero()) out.emplace_back(r1[i].first, v);
      ++i;
    } else if (i >= r1.size() || r2[j].first < r1[i].first) {
      GInt v = gmul(c2, r2[j].second);
      if (!v.is_zero()) out.emplace_back(r2[j].first, v);
      ++j;
    } else {
      GInt v = gsub(gmul(c1, r1[i].second), gmul({-c2.re, -c2.im}, r2[j].second));
      // v = c1*a + c2*b written as c1*a - (-c2)*b
      if (!v.is_zero()) out.emplace_back(r1[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

SpRow row_scale_div(const GInt& c, const SpRow& r, const GInt& d) {
  SpRow out;
  out.reserve(r.size());
  for (auto& [col, v] : r) {
    GInt w = gdiv_exact(gmul(c, v), d);
    if (!w.is_zero()) out.emplace_back(col, w);
  }
  return out;
}

}  // namespace

int rank_sparse_ff(const ScalarMat& M) {
  // clear denominators row by row
  std::vector<SpRow> rows;
  rows.reserve(M.rows);
  for (int i = 0; i < M.rows; ++i) {
    Int lcm = 1;
    for (int j = 0; j < M.cols; ++j) {
      const Scalar& s = M.at(i, j);
      if (s.is_zero()) continue;
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(s.re()));
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(s.im()));
    }
    SpRow row;
    for (int j = 0; j < M.cols; ++j) {
      const Scalar& s = M.at(i, j);
      if (s.is_zero()) continue;
      Rational re = s.re() * lcm;
      Rational im = s.im() * lcm;
      row.emplace_back(j, GInt{boost::multiprecision::numerator(re),
                               boost::multiprecision::numerator(im)});
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }

  int rank = 0;
  GInt prev{1, 0};
  std::vector<int> col_count;
  while (!rows.empty()) {
    // pivot: shortest row, then its entry in the sparsest column
    col_count.assign(M.cols, 0);
    for (auto& r : rows)
      for (auto& [c, v] : r) ++col_count[c];
    size_t best_row = 0;
    for (size_t i = 1; i < rows.size(); ++i)
      if (rows[i].size() < rows[best_row].size()) best_row = i;
    int best_k = 0;
    for (size_t k = 1; k < rows[best_row].size(); ++k)
      if (col_count[rows[best_row][k].first] < col_count[rows[best_row][best_k].first])
        best_k = static_cast<int>(k);
    SpRow piv_row = std::move(rows[best_row]);
    rows.erase(rows.begin() + static_cast<long>(best_row));
    int piv_col = piv_row[best_k].first;
    GInt piv_val = piv_row[best_k].second;
    ++rank;

    std::vector<SpRow> next;
    next.reserve(rows.size());
    for (auto& r : rows) {
      auto it = std::lower_bound(r.begin(), r.end(), piv_col,
                                 [](const auto& e, int c) { return e.first < c; });
      SpRow updated;
      if (it != r.end() && it->first == piv_col) {
        GInt coef = it->second;
        SpRow comb = row_comb(piv_val, r, {-coef.re, -coef.im}, piv_row);
        updated.reserve(comb.size());
        for (auto& [c, v] : comb) {
          GInt w = gdiv_exact(v, prev);
          if (!w.is_zero()) updated.emplace_back(c, w);
        }
      } else {
        updated = row_scale_div(piv_val, r, prev);
      }
      if (!updated.empty()) next.push_back(std::move(updated));
    }
    rows = std::move(next);
    prev = piv_val;
  }
  return rank;
}

int rank_poly_ff(PolyMat M) {
  int rows = static_cast<int>(M.size());
  int cols = rows ? static_cast<int>(M[0].size()) : 0;
  int rank = 0;
  Poly prev;  // empty means 1 on first step
  std::vector<bool> row_used(rows, false), col_used(cols, false);
  for (;;) {
    int pr = -1, pc = -1;
    int best_terms = -1;
    for (int i = 0; i < rows; ++i) {
      if (row_used[i]) continue;
      for (int j = 0; j < cols; ++j) {
        if (col_used[j] || M[i][j].is_zero()) continue;
        int t = M[i][j].num_terms();
        if (best_terms < 0 || t < best_terms) {
          best_terms = t;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr < 0) break;
    ++rank;
    const Poly piv = M[pr][pc];
    for (int i = 0; i < rows; ++i) {
      if (row_used[i] || i == pr) continue;
      for (int j = 0; j < cols; ++j) {
        if (col_used[j] || j == pc) continue;
        Poly num = piv * M[i][j] - M[i][pc] * M[pr][j];
        if (prev.is_zero() && rank == 1) {
          M[i][j] = num;
        } else {
          auto q = exact_divide(num, prev);
          if (!q) throw Error("polynomial fraction-free division was not exact");
          M[i][j] = *q;
        }
      }
    }
    for (int i = 0; i < rows; ++i) M[i][pc] = Poly();
    row_used[pr] = true;
    col_used[pc] = true;
    prev = piv;
  }
  return rank;
}

}  // namespace lalg
