#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lalg/chart.hpp"
#include "lalg/exterior.hpp"
#include "lalg/poly.hpp"
#include "lalg/scalar.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

using namespace lalg;

TEST_CASE("scalar arithmetic") {
  Scalar a(Rational(3, 4), Rational(-1, 2));
  Scalar b(Rational(-2), Rational(5, 3));
  CHECK(a + b == Scalar(Rational(-5, 4), Rational(7, 6)));
  CHECK(a - b == Scalar(Rational(11, 4), Rational(-13, 6)));
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(a * a.conj() == Scalar(a.norm()));
  CHECK(a * a.inverse() == Scalar(1));
  CHECK((a / b) * b == a);
  CHECK(Scalar(0).is_zero());
  CHECK(Scalar(1).is_one());
  CHECK(!Scalar::i().is_real());
  CHECK_THROWS(Scalar(0).inverse());
}

TEST_CASE("scalar string round trip") {
  std::vector<Scalar> samples = {
      Scalar(0),
      Scalar(7),
      Scalar(-3),
      Scalar(Rational(2, 3)),
      Scalar::i(),
      -Scalar::i(),
      Scalar(Rational(0), Rational(-5, 4)),
      Scalar(Rational(1, 2), Rational(3)),
      Scalar(Rational(-7, 6), Rational(-1)),
  };
  for (const auto& s : samples) CHECK(Scalar::parse(s.str()) == s);
  CHECK(Scalar(5).str() == "5");
  CHECK(Scalar(Rational(1, 2)).str() == "1/2");
  CHECK(Scalar::i().str() == "i");
  CHECK(rational_str(Rational(-3, 7)) == "-3/7");
}

TEST_CASE("chart lookup and conjugation") {
  auto ch = Chart::create({{"z", 1}, {"w", 2}, {"zb", 1}, {"wb", 2}},
                          {{"z", "zb"}, {"w", "wb"}});
  CHECK(ch->size() == 4);
  CHECK(ch->index_of("w") == 1);
  CHECK(ch->index_of("nope") == -1);
  CHECK(ch->conj(0) == 2);
  CHECK(ch->conj(2) == 0);
  CHECK(ch->has_pairs());
  CHECK(!ch->is_conjugate_var(0));
  CHECK(ch->is_conjugate_var(2));
  auto real = Chart::affine(3);
  CHECK(real->self_conjugate(1));
  CHECK(!real->has_pairs());
  CHECK_THROWS(Chart::create({{"x"}, {"x"}}));
}

TEST_CASE("poly parse and print round trip") {
  auto ch = Chart::create({{"x"}, {"y"}});
  std::vector<std::string> texts = {
      "0", "1", "-3/2", "x", "x^2*y", "2*x - 3*y + 1", "i*x + (1-i)*y^3",
  };
  for (const auto& t : texts) {
    Poly p = Poly::parse(ch, t);
    CHECK(Poly::parse(ch, p.str()) == p);
  }
  CHECK(Poly::parse(ch, "x + x") == Poly::parse(ch, "2*x"));
  CHECK(Poly::parse(ch, "x - x").is_zero());
  CHECK_THROWS(Poly::parse(ch, "q + 1"));
}

TEST_CASE("poly ring laws on random samples") {
  auto ch = Chart::create({{"x"}, {"y"}, {"z"}});
  std::mt19937_64 rng(99);
  auto rnd = [&]() {
    Poly p(ch);
    int terms = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < terms; ++t) {
      Exps e(3, 0);
      for (int s = 0; s < static_cast<int>(rng() % 4); ++s) e[rng() % 3] += 1;
      p += Poly::monomial(ch, e, Scalar(static_cast<int>(rng() % 7) - 3));
    }
    return p;
  };
  for (int t = 0; t < 40; ++t) {
    Poly a = rnd(), b = rnd(), c = rnd();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("derivative and evaluation") {
  auto ch = Chart::create({{"x"}, {"y"}});
  Poly f = Poly::parse(ch, "x^3*y + 2*y^2");
  CHECK(f.pderiv(0) == Poly::parse(ch, "3*x^2*y"));
  CHECK(f.pderiv(1) == Poly::parse(ch, "x^3 + 4*y"));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 20; ++t) {
    Poly a = Poly::parse(ch, "x^2 - y"), b = Poly::parse(ch, "x*y + 3");
    CHECK((a * b).pderiv(0) == a.pderiv(0) * b + a * b.pderiv(0));
  }
  CHECK(f.eval({Scalar(2), Scalar(-1)}) == Scalar(-6));
  CHECK(f.pow(2) == f * f);
  CHECK(Poly::parse(ch, "x").pow(0) == Poly::constant(ch, Scalar(1)));
}

TEST_CASE("weighted homogeneity") {
  auto ch = Chart::create({{"x", 1}, {"y", 2}});
  Poly f = Poly::parse(ch, "x^2 + 3*y");
  CHECK(f.homogeneous_weight() == 2);
  CHECK(f.is_homogeneous_of(2));
  Poly g = Poly::parse(ch, "x + y");
  CHECK(!g.homogeneous_weight().has_value());
  auto comps = g.homog_components();
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].first == 2);
  CHECK(comps[0].second == Poly::parse(ch, "y"));
  CHECK(comps[1].first == 1);
  CHECK(Poly(ch).homogeneous_weight() == 0);
}

TEST_CASE("conjugation on paired charts") {
  auto ch = Chart::create({{"z"}, {"zb"}}, {{"z", "zb"}});
  Poly f = Poly::parse(ch, "i*z^2 + (1+i)*zb");
  CHECK(f.conjugate() == Poly::parse(ch, "-i*zb^2 + (1-i)*z"));
  CHECK(f.conjugate().conjugate() == f);
}

TEST_CASE("exact division") {
  auto ch = Chart::create({{"x"}, {"y"}});
  Poly num = Poly::parse(ch, "x^2 - y^2");
  auto q = exact_divide(num, Poly::parse(ch, "x - y"));
  REQUIRE(q.has_value());
  CHECK(*q == Poly::parse(ch, "x + y"));
  CHECK(!exact_divide(Poly::parse(ch, "x^2 + 1"), Poly::parse(ch, "y")).has_value());
}

namespace {

// brute parity by counting inversions
int inversion_sign(const IndexTuple& t) {
  int inv = 0;
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return 0;
      if (t[i] > t[j]) ++inv;
    }
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("sorting signs match inversion parity") {
  std::mt19937_64 rng(4242);
  for (int t = 0; t < 200; ++t) {
    IndexTuple tup(1 + rng() % 5);
    for (auto& v : tup) v = static_cast<int>(rng() % 6);
    int expect = inversion_sign(tup);
    IndexTuple copy = tup;
    int got = sort_with_sign(copy);
    CHECK(got == expect);
    CHECK(std::is_sorted(copy.begin(), copy.end()));
  }
}

TEST_CASE("merge sign agrees with concatenated sort") {
  std::mt19937_64 rng(555);
  for (int t = 0; t < 200; ++t) {
    std::set<int> sa, sb;
    for (int k = 0; k < static_cast<int>(rng() % 4); ++k) sa.insert(rng() % 8);
    for (int k = 0; k < static_cast<int>(rng() % 4); ++k) sb.insert(rng() % 8);
    IndexTuple a(sa.begin(), sa.end()), b(sb.begin(), sb.end());
    IndexTuple cat = a;
    cat.insert(cat.end(), b.begin(), b.end());
    IndexTuple merged;
    CHECK(merge_sign(a, b, &merged) == sort_with_sign(cat));
    if (merge_sign(a, b) != 0) CHECK(merged == cat);
  }
}

TEST_CASE("tuple enumeration") {
  auto ts = tuples(4, 2);
  REQUIRE(ts.size() == 6);
  CHECK(ts.front() == IndexTuple{0, 1});
  CHECK(ts.back() == IndexTuple{2, 3});
  for (const auto& t : ts) CHECK(std::is_sorted(t.begin(), t.end()));
  CHECK(tuples(5, 0).size() == 1);
  CHECK(tuples(3, 4).empty());
  CHECK(tuple_weight({0, 2}, {5, 7, 11}) == 16);
  CHECK(tuple_erase({3, 5, 9}, 1) == IndexTuple{3, 9});
}
