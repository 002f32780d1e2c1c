#include "lalg/representation.hpp"

#include "lalg/errors.hpp"
#include "lalg/probes.hpp"

#include <random>
#include <sstream>

namespace lalg {

Representation Representation::trivial(const PresPtr& p) {
  Representation rep;
  rep.pres = p;
  rep.rank = 1;
  rep.val_weights = {0};
  rep.gamma.assign(p->rank(), PolyMat(1, PolyVec(1, Poly(p->chart()))));
  return rep;
}

Representation Representation::create(const PresPtr& p, std::vector<PolyMat> gamma,
                                      std::vector<int> val_weights) {
  if (!p) throw Error("representation needs a presentation");
  if (static_cast<int>(gamma.size()) != p->rank())
    throw StructureError("one connection matrix per generator expected");
  int m = gamma.empty() ? 0 : static_cast<int>(gamma[0].size());
  if (m == 0) throw StructureError("connection matrices must be nonempty");
  for (const auto& g : gamma) {
    if (static_cast<int>(g.size()) != m) throw StructureError("connection matrix shape");
    for (const auto& row : g)
      if (static_cast<int>(row.size()) != m) throw StructureError("connection matrix shape");
  }
  if (val_weights.empty()) val_weights.assign(m, 0);
  if (static_cast<int>(val_weights.size()) != m)
    throw StructureError("module weight count mismatch");
  Representation rep;
  rep.pres = p;
  rep.rank = m;
  rep.val_weights = std::move(val_weights);
  rep.gamma = std::move(gamma);
  return rep;
}

Representation dual_rep(const Representation& rep) {
  int m = rep.rank;
  std::vector<PolyMat> g(rep.gamma.size(), PolyMat(m, PolyVec(m, Poly(rep.pres->chart()))));
  for (size_t i = 0; i < rep.gamma.size(); ++i)
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        g[i][a][b] = Scalar(-1) * rep.gamma[i][b][a];
  std::vector<int> w(m);
  for (int a = 0; a < m; ++a) w[a] = -rep.val_weights[a];
  return Representation::create(rep.pres, std::move(g), std::move(w));
}

Representation exterior_power_rep(const Representation& rep, int q) {
  int m = rep.rank;
  if (q < 0 || q > m) throw Error("exterior power out of range");
  auto basis = tuples(m, q);
  std::map<IndexTuple, int> pos;
  for (size_t t = 0; t < basis.size(); ++t) pos[basis[t]] = static_cast<int>(t);
  int mq = static_cast<int>(basis.size());
  const ChartPtr& chart = rep.pres->chart();
  std::vector<PolyMat> g(rep.gamma.size(), PolyMat(mq, PolyVec(mq, Poly(chart))));
  for (size_t i = 0; i < rep.gamma.size(); ++i) {
    for (int bi = 0; bi < mq; ++bi) {
      const IndexTuple& B = basis[bi];
      for (int l = 0; l < q; ++l) {
        for (int c = 0; c < m; ++c) {
          const Poly& coeff = rep.gamma[i][B[l]][c];
          if (coeff.is_zero()) continue;
          IndexTuple T = B;
          T[l] = c;
          int sign = sort_with_sign(T);
          if (sign == 0) continue;
          Poly& slot = g[i][bi][pos.at(T)];
          slot = sign > 0 ? slot + coeff : slot - coeff;
        }
      }
    }
  }
  std::vector<int> w(mq, 0);
  for (int t = 0; t < mq; ++t)
    for (int b : basis[t]) w[t] += rep.val_weights[b];
  return Representation::create(rep.pres, std::move(g), std::move(w));
}

PolyVec connection_apply(const Representation& rep, const Section& u, const PolyVec& s) {
  const PresPtr& p = rep.pres;
  int m = rep.rank;
  PolyVec out(m, Poly(p->chart()));
  // nabla_u (sum_a s_a e_a) = sum_a anchor(u)(s_a) e_a + sum_{i,a,b} u_i s_a gamma_i[a][b] e_b
  for (int a = 0; a < m; ++a) out[a] = p->anchor_apply(u.coeff, s[a]);
  for (int i = 0; i < p->rank(); ++i) {
    if (u.coeff[i].is_zero()) continue;
    for (int a = 0; a < m; ++a) {
      if (s[a].is_zero()) continue;
      for (int b = 0; b < m; ++b) {
        const Poly& gab = rep.gamma[i][a][b];
        if (!gab.is_zero()) out[b] += u.coeff[i] * s[a] * gab;
      }
    }
  }
  return out;
}

RepReport validate_representation(const Representation& rep, int probes, unsigned seed) {
  RepReport out;
  const PresPtr& p = rep.pres;
  int r = p->rank();
  int m = rep.rank;

  // curvature on generator pairs:
  // a_i(g_j) - a_j(g_i) + g_j g_i - g_i g_j - sum_k c[i][j][k] g_k = 0
  for (int i = 0; i < r && out.flat_ok; ++i) {
    for (int j = i + 1; j < r && out.flat_ok; ++j) {
      for (int a = 0; a < m && out.flat_ok; ++a) {
        for (int b = 0; b < m; ++b) {
          Poly acc = p->anchor_apply(i, rep.gamma[j][a][b]) -
                     p->anchor_apply(j, rep.gamma[i][a][b]);
          for (int c = 0; c < m; ++c)
            acc += rep.gamma[j][a][c] * rep.gamma[i][c][b] -
                   rep.gamma[i][a][c] * rep.gamma[j][c][b];
          const PolyVec& br = p->bracket(i, j);
          for (int k = 0; k < r; ++k)
            if (!br[k].is_zero()) acc -= br[k] * rep.gamma[k][a][b];
          if (!acc.is_zero()) {
            out.flat_ok = false;
            std::ostringstream os;
            os << "curvature (" << p->gen_name(i) << ", " << p->gen_name(j)
               << ") component (" << a << ", " << b << "): " << acc.str();
            out.witness = os.str();
            break;
          }
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  for (int t = 0; t < probes && out.flat_ok; ++t) {
    Section u = random_section(p, rng);
    Section v = random_section(p, rng);
    PolyVec s(m, Poly(p->chart()));
    for (auto& f : s) f = random_poly(p->chart(), rng, 2);
    PolyVec lhs = connection_apply(rep, u, connection_apply(rep, v, s));
    PolyVec rhs = connection_apply(rep, v, connection_apply(rep, u, s));
    PolyVec brk = connection_apply(rep, bracket_sections(u, v), s);
    for (int a = 0; a < m; ++a) {
      Poly diff = lhs[a] - rhs[a] - brk[a];
      if (!diff.is_zero()) {
        out.flat_ok = false;
        out.witness = "curvature probe " + std::to_string(t) + " component " +
                      std::to_string(a);
        break;
      }
    }
  }
  return out;
}

Cochain twisted_diff(const Representation& rep, const Cochain& xi) {
  if (xi.value_dim() != rep.rank)
    throw StructureError("cochain value dimension must match the module rank");
  return cochain_diff_impl(xi, &rep.gamma);
}

}  // namespace lalg
