#include "lalg/multivector.hpp"

#include "lalg/errors.hpp"

#include <sstream>

namespace lalg {

Multivector::Multivector(ChartPtr chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  if (!chart_) throw Error("multivector needs a chart");
  if (degree < -1) throw Error("multivector degree out of range");
}

Multivector Multivector::function(const Poly& f) {
  if (!f.chart()) throw Error("multivector needs a chart");
  Multivector u(f.chart(), 0);
  if (!f.is_zero()) u.terms_[{}] = f;
  return u;
}

Multivector Multivector::term(const ChartPtr& chart, IndexTuple t, Poly coeff) {
  Multivector u(chart, static_cast<int>(t.size()));
  for (size_t i = 0; i < t.size(); ++i) {
    if (t[i] < 0 || t[i] >= chart->size()) throw Error("variable index out of range");
    if (i > 0 && t[i - 1] >= t[i]) throw Error("tuple must be strictly increasing");
  }
  if (!coeff.is_zero()) u.terms_[std::move(t)] = std::move(coeff);
  return u;
}

Poly Multivector::coeff(const IndexTuple& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Poly(chart_) : it->second;
}

void Multivector::add_signed(IndexTuple t, const Poly& c) {
  if (c.is_zero()) return;
  int sign = sort_with_sign(t);
  if (sign == 0) return;
  auto it = terms_.try_emplace(std::move(t), Poly(chart_)).first;
  it->second = sign > 0 ? it->second + c : it->second - c;
  if (it->second.is_zero()) terms_.erase(it);
}

Multivector& Multivector::operator+=(const Multivector& o) {
  if (chart_ != o.chart_ || degree_ != o.degree_)
    throw ChartMismatchError("multivector shape mismatch");
  for (const auto& [t, c] : o.terms_) {
    Poly& slot = terms_.try_emplace(t, Poly(chart_)).first->second;
    slot += c;
    if (slot.is_zero()) terms_.erase(t);
  }
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  return *this += Scalar(-1) * o;
}

Multivector operator*(const Poly& f, Multivector u) {
  std::map<IndexTuple, Poly> out;
  for (auto& [t, c] : u.terms_) {
    Poly p = f * c;
    if (!p.is_zero()) out[t] = std::move(p);
  }
  u.terms_ = std::move(out);
  return u;
}

Multivector operator*(const Scalar& s, Multivector u) {
  Poly f = Poly::constant(u.chart(), s);
  return f * std::move(u);
}

bool operator==(const Multivector& a, const Multivector& b) {
  Multivector d = a;
  d -= b;
  return d.is_zero();
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i : t) os << "*d_" << chart_->name(i);
  }
  return os.str();
}

Multivector wedge(const Multivector& a, const Multivector& b) {
  if (a.chart() != b.chart()) throw ChartMismatchError("wedge across charts");
  Multivector out(a.chart(), a.degree() + b.degree());
  for (const auto& [s, f] : a.terms())
    for (const auto& [t, g] : b.terms()) {
      IndexTuple merged;
      int sign = merge_sign(s, t, &merged);
      if (sign == 0) continue;
      Poly c = f * g;
      if (sign < 0) c = Scalar(-1) * c;
      out.add_signed(std::move(merged), c);
    }
  return out;
}

Multivector schouten(const Multivector& u, const Multivector& v) {
  if (u.chart() != v.chart()) throw ChartMismatchError("bracket across charts");
  const ChartPtr& chart = u.chart();
  int p = u.degree(), q = v.degree();
  Multivector out(chart, p + q - 1);
  for (const auto& [I, f] : u.terms()) {
    for (const auto& [J, g] : v.terms()) {
      // first sum: derivatives of g along the entries of I
      for (int l = 1; l <= p; ++l) {
        Poly dg = g.pderiv(I[l - 1]);
        if (dg.is_zero()) continue;
        IndexTuple rest = tuple_erase(I, l - 1);
        IndexTuple merged;
        int sign = merge_sign(rest, J, &merged);
        if (sign == 0) continue;
        int total = ((p - l) % 2 == 0 ? 1 : -1) * sign;
        Poly c = f * dg;
        if (total < 0) c = Scalar(-1) * c;
        out.add_signed(std::move(merged), c);
      }
      // second sum: derivatives of f along the entries of J
      int outer = ((q - 1) * p + q) % 2 == 0 ? 1 : -1;
      for (int l = 1; l <= q; ++l) {
        Poly df = f.pderiv(J[l - 1]);
        if (df.is_zero()) continue;
        IndexTuple rest = tuple_erase(J, l - 1);
        IndexTuple merged;
        int sign = merge_sign(rest, I, &merged);
        if (sign == 0) continue;
        int total = outer * ((q - l) % 2 == 0 ? 1 : -1) * sign;
        Poly c = g * df;
        if (total < 0) c = Scalar(-1) * c;
        out.add_signed(std::move(merged), c);
      }
    }
  }
  return out;
}

Multivector conjugate_multivector(const Multivector& u) {
  const ChartPtr& chart = u.chart();
  Multivector out(chart, u.degree());
  for (const auto& [t, c] : u.terms()) {
    IndexTuple mapped;
    mapped.reserve(t.size());
    for (int i : t) mapped.push_back(chart->conj(i));
    out.add_signed(std::move(mapped), c.conjugate());
  }
  return out;
}

}  // namespace lalg
