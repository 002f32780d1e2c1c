#include "lalg/homology.hpp"

#include "lalg/errors.hpp"

#include <algorithm>
#include <sstream>

namespace lalg {

namespace {

ScalarMat mat_add(const ScalarMat& A, const ScalarMat& B) {
  ScalarMat out(A.rows, A.cols);
  for (size_t k = 0; k < out.a.size(); ++k) out.a[k] = A.a[k] + B.a[k];
  return out;
}

std::vector<Scalar> matvec(const ScalarMat& A, const std::vector<Scalar>& x) {
  std::vector<Scalar> out(A.rows);
  for (int i = 0; i < A.rows; ++i) {
    Scalar acc;
    for (int j = 0; j < A.cols; ++j)
      if (!A.at(i, j).is_zero()) acc += A.at(i, j) * x[j];
    out[i] = acc;
  }
  return out;
}

std::vector<Scalar> column(const ScalarMat& A, int j) {
  std::vector<Scalar> out(A.rows);
  for (int i = 0; i < A.rows; ++i) out[i] = A.at(i, j);
  return out;
}

}  // namespace

void check_complex(const MatrixComplex& c) {
  if (c.dims.size() != c.d.size() + 1)
    throw StructureError("complex needs one more dimension entry than maps");
  for (size_t k = 0; k < c.d.size(); ++k) {
    if (c.d[k].cols != c.dims[k] || c.d[k].rows != c.dims[k + 1]) {
      std::ostringstream os;
      os << "map " << k << " has shape " << c.d[k].rows << "x" << c.d[k].cols
         << ", expected " << c.dims[k + 1] << "x" << c.dims[k];
      throw StructureError(os.str());
    }
  }
  for (size_t k = 0; k + 1 < c.d.size(); ++k) {
    if (!mat_mul(c.d[k + 1], c.d[k]).is_zero()) {
      std::ostringstream os;
      os << "d^2 != 0 between degrees " << k << " and " << k + 2;
      throw StructureError(os.str());
    }
  }
}

BettiTable betti(const MatrixComplex& c, int weight_label) {
  check_complex(c);
  BettiTable out;
  out.weight = weight_label;
  out.dims = c.dims;
  out.ranks.resize(c.d.size());
  for (size_t k = 0; k < c.d.size(); ++k) out.ranks[k] = rank_sparse_ff(c.d[k]);
  out.betti.resize(c.dims.size());
  for (size_t k = 0; k < c.dims.size(); ++k) {
    int r_out = k < out.ranks.size() ? out.ranks[k] : 0;
    int r_in = k > 0 ? out.ranks[k - 1] : 0;
    out.betti[k] = c.dims[k] - r_out - r_in;
  }
  return out;
}

SliceComplex build_complex(const ComplexModel& m, int weight) {
  SliceComplex out;
  out.weight = weight;
  int top = m.top_degree();
  for (int k = 0; k <= top + 1; ++k) out.bases.push_back(build_slice(m, k, weight));
  for (int k = 0; k <= top; ++k) {
    ScalarMat d = differential_matrix(m, out.bases[k], out.bases[k + 1]);
    if (k < top) out.cx.d.push_back(std::move(d));
  }
  out.bases.pop_back();  // the guard degree above the top is always empty
  for (const auto& b : out.bases) out.cx.dims.push_back(b.dim());
  check_complex(out.cx);
  return out;
}

BettiTable betti(const ComplexModel& m, int weight) {
  SliceComplex c = build_complex(m, weight);
  return betti(c.cx, weight);
}

DoubleReport check_double(const DoubleComplexSlice& dc) {
  DoubleReport rep;
  auto dim_at = [&](int p, int q) {
    if (p < 0 || q < 0 || p > dc.pmax || q > dc.qmax) return 0;
    return dc.dims[p][q];
  };
  auto fail = [&](bool& flag, const char* what, int p, int q) {
    if (!rep.witness.empty()) return;
    flag = false;
    std::ostringstream os;
    os << what << " fails at (p, q) = (" << p << ", " << q << "), weight "
       << dc.weight;
    rep.witness = os.str();
  };
  for (int p = 0; p <= dc.pmax && rep.ok(); ++p) {
    for (int q = 0; q <= dc.qmax && rep.ok(); ++q) {
      if (dc.d1[p][q].cols != dc.dims[p][q] || dc.d1[p][q].rows != dim_at(p + 1, q) ||
          dc.d2[p][q].cols != dc.dims[p][q] || dc.d2[p][q].rows != dim_at(p, q + 1))
        throw StructureError("double complex block shapes are inconsistent");
      if (p + 1 <= dc.pmax && !mat_mul(dc.d1[p + 1][q], dc.d1[p][q]).is_zero())
        fail(rep.d1_ok, "d1 d1", p, q);
      if (q + 1 <= dc.qmax && !mat_mul(dc.d2[p][q + 1], dc.d2[p][q]).is_zero())
        fail(rep.d2_ok, "d2 d2", p, q);
      if (p + 1 <= dc.pmax && q + 1 <= dc.qmax) {
        ScalarMat anti = mat_add(mat_mul(dc.d2[p + 1][q], dc.d1[p][q]),
                                 mat_mul(dc.d1[p][q + 1], dc.d2[p][q]));
        if (!anti.is_zero()) fail(rep.anti_ok, "d1 d2 + d2 d1", p, q);
      }
    }
  }
  return rep;
}

MatrixComplex total_complex(const DoubleComplexSlice& dc) {
  int N = dc.pmax + dc.qmax;
  MatrixComplex out;
  out.dims.assign(N + 1, 0);
  // offset of block (p, k - p) inside total degree k
  std::vector<std::vector<int>> offset(N + 1, std::vector<int>(dc.pmax + 1, 0));
  for (int k = 0; k <= N; ++k) {
    int acc = 0;
    for (int p = 0; p <= dc.pmax; ++p) {
      int q = k - p;
      offset[k][p] = acc;
      if (q >= 0 && q <= dc.qmax) acc += dc.dims[p][q];
    }
    out.dims[k] = acc;
  }
  for (int k = 0; k < N; ++k) {
    ScalarMat D(out.dims[k + 1], out.dims[k]);
    for (int p = 0; p <= dc.pmax; ++p) {
      int q = k - p;
      if (q < 0 || q > dc.qmax || dc.dims[p][q] == 0) continue;
      int co = offset[k][p];
      if (p + 1 <= dc.pmax && k + 1 - (p + 1) <= dc.qmax) {
        const ScalarMat& B = dc.d1[p][q];
        int ro = offset[k + 1][p + 1];
        for (int i = 0; i < B.rows; ++i)
          for (int j = 0; j < B.cols; ++j)
            if (!B.at(i, j).is_zero()) D.at(ro + i, co + j) = B.at(i, j);
      }
      if (q + 1 <= dc.qmax) {
        const ScalarMat& B = dc.d2[p][q];
        int ro = offset[k + 1][p];
        for (int i = 0; i < B.rows; ++i)
          for (int j = 0; j < B.cols; ++j)
            if (!B.at(i, j).is_zero()) D.at(ro + i, co + j) = B.at(i, j);
      }
    }
    out.d.push_back(std::move(D));
  }
  return out;
}

SpectralResult spectral_pages(const DoubleComplexSlice& dc) {
  DoubleReport chk = check_double(dc);
  if (!chk.ok()) throw StructureError("not a double complex: " + chk.witness);
  int P = dc.pmax, Q = dc.qmax;
  SpectralResult out;
  out.e0 = dc.dims;
  out.e1.assign(P + 1, std::vector<int>(Q + 1, 0));
  out.e2.assign(P + 1, std::vector<int>(Q + 1, 0));

  // vertical cohomology representatives: columns extending the boundary
  // image to a basis of the kernel
  std::vector<std::vector<ScalarMat>> reps(P + 1, std::vector<ScalarMat>(Q + 1));
  for (int p = 0; p <= P; ++p) {
    for (int q = 0; q <= Q; ++q) {
      int n = dc.dims[p][q];
      ScalarMat bnd = q > 0 ? dc.d2[p][q - 1] : ScalarMat(n, 0);
      ScalarMat ker = q < Q ? nullspace(dc.d2[p][q]) : ScalarMat::identity(n);
      Rref rr = rref(hcat(bnd, ker));
      std::vector<int> picked;
      for (int pc : rr.pivots)
        if (pc >= bnd.cols) picked.push_back(pc - bnd.cols);
      ScalarMat R(n, static_cast<int>(picked.size()));
      for (int j = 0; j < R.cols; ++j)
        for (int i = 0; i < n; ++i) R.at(i, j) = ker.at(i, picked[j]);
      out.e1[p][q] = R.cols;
      reps[p][q] = std::move(R);
    }
  }

  // map induced by d1 in representative coordinates
  std::vector<std::vector<ScalarMat>> ind(P + 1, std::vector<ScalarMat>(Q + 1));
  for (int p = 0; p <= P; ++p) {
    for (int q = 0; q <= Q; ++q) {
      if (p == P) {
        ind[p][q] = ScalarMat(0, out.e1[p][q]);
        continue;
      }
      int nt = dc.dims[p + 1][q];
      ScalarMat bnd = q > 0 ? dc.d2[p + 1][q - 1] : ScalarMat(nt, 0);
      ScalarMat frame = hcat(bnd, reps[p + 1][q]);
      ScalarMat M(reps[p + 1][q].cols, reps[p][q].cols);
      for (int j = 0; j < reps[p][q].cols; ++j) {
        auto w = matvec(dc.d1[p][q], column(reps[p][q], j));
        auto x = solve(frame, w);
        if (!x) throw StructureError("page map escapes the vertical cohomology");
        for (int i = 0; i < M.rows; ++i) M.at(i, j) = (*x)[bnd.cols + i];
      }
      ind[p][q] = std::move(M);
    }
  }
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Q; ++q) {
      int r_out = rank_dense(ind[p][q]);
      int r_in = p > 0 ? rank_dense(ind[p - 1][q]) : 0;
      out.e2[p][q] = out.e1[p][q] - r_out - r_in;
    }
  return out;
}

namespace {

// columns of the identity selecting the basis elements with level >= p
ScalarMat filtration_inclusion(const std::vector<int>& level, int dim, int p) {
  std::vector<int> cols;
  for (int i = 0; i < dim; ++i)
    if (level[i] >= p) cols.push_back(i);
  ScalarMat F(dim, static_cast<int>(cols.size()));
  for (int j = 0; j < F.cols; ++j) F.at(cols[j], j) = Scalar(1);
  return F;
}

}  // namespace

std::vector<FilteredPage> filtered_pages(const FilteredComplex& fc, int rmax) {
  const MatrixComplex& cx = fc.cx;
  check_complex(cx);
  int N = static_cast<int>(cx.dims.size()) - 1;
  if (fc.level.size() != cx.dims.size())
    throw StructureError("one level vector per degree expected");
  for (int k = 0; k <= N; ++k)
    if (static_cast<int>(fc.level[k].size()) != cx.dims[k])
      throw StructureError("level vector length mismatch");
  int lo = 0, hi = 0;
  bool any = false;
  for (int k = 0; k <= N; ++k)
    for (int l : fc.level[k]) {
      if (!any || l < lo) lo = l;
      if (!any || l > hi) hi = l;
      any = true;
    }
  if (!any) return {};

  // the differential must not lower the level
  for (int k = 0; k < N; ++k)
    for (int i = 0; i < cx.d[k].rows; ++i)
      for (int j = 0; j < cx.d[k].cols; ++j)
        if (!cx.d[k].at(i, j).is_zero() && fc.level[k + 1][i] < fc.level[k][j])
          throw StructureError("differential lowers the filtration level");

  // Z_r^{p, k-p} as a column basis inside C^k
  auto zbasis = [&](int r, int p, int k) -> ScalarMat {
    if (k < 0 || k > N) return ScalarMat(0, 0);
    ScalarMat F = filtration_inclusion(fc.level[k], cx.dims[k], p);
    if (F.cols == 0 || k == N) return F;
    ScalarMat M = mat_mul(cx.d[k], F);
    // rows of C^{k+1} below level p + r
    std::vector<int> rows;
    for (int i = 0; i < cx.dims[k + 1]; ++i)
      if (fc.level[k + 1][i] < p + r) rows.push_back(i);
    ScalarMat PM(static_cast<int>(rows.size()), M.cols);
    for (size_t i = 0; i < rows.size(); ++i)
      for (int j = 0; j < M.cols; ++j) PM.at(static_cast<int>(i), j) = M.at(rows[i], j);
    return mat_mul(F, nullspace(PM));
  };

  std::vector<FilteredPage> pages;
  for (int r = 0; r <= rmax; ++r) {
    FilteredPage page;
    page.r = r;
    for (int k = 0; k <= N; ++k) {
      for (int p = lo; p <= hi; ++p) {
        int q = k - p;
        ScalarMat Z = zbasis(r, p, k);
        if (Z.cols == 0) continue;
        ScalarMat B1 = zbasis(r - 1, p + 1, k);
        ScalarMat B2 = k > 0 ? mat_mul(cx.d[k - 1], zbasis(r - 1, p - r + 1, k - 1))
                             : ScalarMat(cx.dims[k], 0);
        int dim = Z.cols - rank_dense(hcat(B1, B2));
        if (dim != 0) page.dims[{p, q}] = dim;
      }
    }
    pages.push_back(std::move(page));
  }
  return pages;
}

}  // namespace lalg
