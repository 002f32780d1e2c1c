#include "lalg/cochain.hpp"

#include "lalg/errors.hpp"

namespace lalg {

Cochain::Cochain(PresPtr pres, int degree, int value_dim)
    : pres_(std::move(pres)), degree_(degree), value_dim_(value_dim) {
  if (!pres_) throw Error("cochain needs a presentation");
  if (degree_ < 0) throw Error("negative cochain degree");
  if (value_dim_ < 1) throw Error("cochain value dimension must be positive");
}

void Cochain::prune(const IndexTuple& t) {
  auto it = terms_.find(t);
  if (it == terms_.end()) return;
  for (auto& p : it->second)
    if (!p.is_zero()) return;
  terms_.erase(it);
}

void Cochain::set_term(const IndexTuple& t, PolyVec v) {
  if (static_cast<int>(t.size()) != degree_) throw Error("tuple size != degree");
  for (size_t i = 1; i < t.size(); ++i)
    if (t[i] <= t[i - 1]) throw Error("tuple not strictly increasing");
  for (int i : t)
    if (i < 0 || i >= pres_->rank()) throw Error("tuple index out of range");
  if (static_cast<int>(v.size()) != value_dim_) throw Error("value size mismatch");
  terms_[t] = std::move(v);
  prune(t);
}

void Cochain::add_signed(IndexTuple t, int comp, const Poly& c) {
  if (static_cast<int>(t.size()) != degree_) throw Error("tuple size != degree");
  if (comp < 0 || comp >= value_dim_) throw Error("component out of range");
  if (c.is_zero()) return;
  int sign = sort_with_sign(t);
  if (sign == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    PolyVec v(value_dim_);
    for (auto& p : v) p = Poly(pres_->chart());
    it = terms_.emplace(std::move(t), std::move(v)).first;
  }
  if (sign > 0)
    it->second[comp] += c;
  else
    it->second[comp] -= c;
  prune(it->first);
}

PolyVec Cochain::eval(IndexTuple t) const {
  PolyVec zero(value_dim_);
  for (auto& p : zero) p = Poly(pres_->chart());
  if (static_cast<int>(t.size()) != degree_) throw Error("tuple size != degree");
  int sign = sort_with_sign(t);
  if (sign == 0) return zero;
  auto it = terms_.find(t);
  if (it == terms_.end()) return zero;
  PolyVec out = it->second;
  if (sign < 0)
    for (auto& p : out) p = -p;
  return out;
}

Poly Cochain::eval_scalar(const IndexTuple& t) const {
  if (value_dim_ != 1) throw Error("eval_scalar needs value dimension 1");
  return eval(t)[0];
}

PolyVec Cochain::eval_on_sections(const std::vector<Section>& args) const {
  if (static_cast<int>(args.size()) != degree_) throw Error("argument count != degree");
  int r = pres_->rank();
  PolyVec out(value_dim_);
  for (auto& p : out) p = Poly(pres_->chart());
  IndexTuple idx(degree_, 0);
  // iterate over all generator assignments
  for (;;) {
    Poly factor = Poly::constant(pres_->chart(), Scalar(1));
    bool zero = false;
    for (int pos = 0; pos < degree_; ++pos) {
      if (args[pos].coeff[idx[pos]].is_zero()) {
        zero = true;
        break;
      }
      factor = factor * args[pos].coeff[idx[pos]];
    }
    if (!zero) {
      PolyVec v = eval(idx);
      for (int b = 0; b < value_dim_; ++b)
        if (!v[b].is_zero()) out[b] += factor * v[b];
    }
    int pos = degree_ - 1;
    while (pos >= 0 && idx[pos] == r - 1) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
  }
  return out;
}

Cochain& Cochain::operator+=(const Cochain& o) {
  if (pres_ != o.pres_ || degree_ != o.degree_ || value_dim_ != o.value_dim_)
    throw Error("cochain shape mismatch");
  for (auto& [t, v] : o.terms_) {
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(t, v);
    } else {
      for (int b = 0; b < value_dim_; ++b) it->second[b] += v[b];
      prune(t);
    }
  }
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  if (pres_ != o.pres_ || degree_ != o.degree_ || value_dim_ != o.value_dim_)
    throw Error("cochain shape mismatch");
  for (auto& [t, v] : o.terms_) {
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      PolyVec neg = v;
      for (auto& p : neg) p = -p;
      terms_.emplace(t, std::move(neg));
    } else {
      for (int b = 0; b < value_dim_; ++b) it->second[b] -= v[b];
      prune(t);
    }
  }
  return *this;
}

Cochain operator*(const Poly& f, Cochain x) {
  if (f.is_zero()) return Cochain(x.pres_, x.degree_, x.value_dim_);
  for (auto& [t, v] : x.terms_)
    for (auto& p : v) p = f * p;
  std::vector<IndexTuple> keys;
  for (auto& [t, v] : x.terms_) keys.push_back(t);
  for (auto& t : keys) x.prune(t);
  return x;
}

bool operator==(const Cochain& a, const Cochain& b) {
  if (a.pres_ != b.pres_ || a.degree_ != b.degree_ || a.value_dim_ != b.value_dim_) return false;
  auto diff = a;
  diff -= b;
  return diff.is_zero();
}

std::string Cochain::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [t, v] : terms_) {
    if (!out.empty()) out += "; ";
    out += "(";
    for (size_t i = 0; i < t.size(); ++i) {
      if (i) out += ",";
      out += pres_->gen_name(t[i]);
    }
    out += ") -> ";
    if (value_dim_ == 1) {
      out += v[0].str();
    } else {
      out += "[";
      for (int b = 0; b < value_dim_; ++b) {
        if (b) out += ", ";
        out += v[b].str();
      }
      out += "]";
    }
  }
  return out;
}

Cochain cochain_diff_impl(const Cochain& xi, const std::vector<PolyMat>* gamma) {
  const auto& p = xi.pres();
  int r = p->rank();
  int deg = xi.degree();
  int m = xi.value_dim();
  Cochain out(p, deg + 1, m);
  if (deg + 1 > r) return out;
  for (const auto& T : tuples(r, deg + 1)) {
    PolyVec val(m);
    for (auto& q : val) q = Poly(p->chart());
    for (int pos = 0; pos <= deg; ++pos) {
      int gi = T[pos];
      IndexTuple rest = tuple_erase(T, pos);
      PolyVec inner = xi.eval(rest);
      bool negate = pos % 2 == 1;  // (-1)^{i-1} with i = pos+1
      for (int b = 0; b < m; ++b) {
        Poly term = p->anchor_apply(gi, inner[b]);
        if (gamma) {
          // minus xi(..., nabla_{e_gi} s_b) with nabla e_gi s_b = sum_c G[b][c] s_c
          const PolyMat& G = (*gamma)[gi];
          for (int c = 0; c < m; ++c)
            if (!G[b][c].is_zero()) term -= G[b][c] * inner[c];
        }
        if (term.is_zero()) continue;
        if (negate) term = -term;
        val[b] += term;
      }
    }
    for (int pos1 = 0; pos1 <= deg; ++pos1)
      for (int pos2 = pos1 + 1; pos2 <= deg; ++pos2) {
        const PolyVec& c = p->bracket(T[pos1], T[pos2]);
        IndexTuple rest = tuple_erase(tuple_erase(T, pos2), pos1);
        bool positive = (pos1 + pos2) % 2 == 0;  // (-1)^{i+j}, i+j = pos1+pos2+2
        for (int k = 0; k < r; ++k) {
          if (c[k].is_zero()) continue;
          IndexTuple args;
          args.reserve(deg);
          args.push_back(k);
          args.insert(args.end(), rest.begin(), rest.end());
          PolyVec inner = xi.eval(args);
          for (int b = 0; b < m; ++b) {
            if (inner[b].is_zero()) continue;
            Poly term = c[k] * inner[b];
            if (positive)
              val[b] += term;
            else
              val[b] -= term;
          }
        }
      }
    bool nonzero = false;
    for (auto& q : val)
      if (!q.is_zero()) nonzero = true;
    if (nonzero) out.set_term(T, std::move(val));
  }
  return out;
}

Cochain cochain_diff(const Cochain& xi) {
  if (xi.value_dim() != 1) throw Error("cochain_diff needs scalar values");
  return cochain_diff_impl(xi, nullptr);
}

Cochain wedge(const Cochain& a, const Cochain& b) {
  if (a.pres() != b.pres()) throw Error("wedge on different presentations");
  if (a.value_dim() != 1 || b.value_dim() != 1) throw Error("wedge needs scalar values");
  Cochain out(a.pres(), a.degree() + b.degree());
  if (out.degree() > a.pres()->rank()) return out;
  for (auto& [I, va] : a.terms())
    for (auto& [J, vb] : b.terms()) {
      IndexTuple merged;
      int sign = merge_sign(I, J, &merged);
      if (sign == 0) continue;
      Poly prod = va[0] * vb[0];
      if (prod.is_zero()) continue;
      if (sign < 0) prod = -prod;
      out.add_signed(merged, 0, prod);
    }
  return out;
}

}  // namespace lalg
