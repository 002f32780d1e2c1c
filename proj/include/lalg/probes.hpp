#pragma once

#include "lalg/presentation.hpp"

#include <random>

namespace lalg {

// small random polynomials and sections for seeded axiom probes
inline Poly random_poly(const ChartPtr& chart, std::mt19937_64& rng, int max_deg) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> deg(0, max_deg);
  Poly out(chart);
  int terms = 1 + static_cast<int>(rng() % 2);
  for (int t = 0; t < terms; ++t) {
    Exps e(chart->size(), 0);
    int d = deg(rng);
    for (int s = 0; s < d && chart->size() > 0; ++s)
      e[rng() % chart->size()] += 1;
    int c = coeff(rng);
    if (c == 0) c = 1;
    out += Poly::monomial(chart, e, Scalar(c));
  }
  return out;
}

inline Section random_section(const PresPtr& p, std::mt19937_64& rng) {
  PolyVec c(p->rank());
  for (auto& f : c) f = random_poly(p->chart(), rng, 2);
  return Section(p, std::move(c));
}

}  // namespace lalg
