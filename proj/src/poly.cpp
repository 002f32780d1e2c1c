#include "lalg/poly.hpp"

#include "lalg/errors.hpp"

#include <algorithm>
#include <cctype>

namespace lalg {

int exps_total(const Exps& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

Poly Poly::constant(ChartPtr chart, Scalar c) {
  Poly p(std::move(chart));
  if (!c.is_zero()) p.terms_.emplace(Exps(p.chart_ ? p.chart_->size() : 0, 0), std::move(c));
  return p;
}

Poly Poly::variable(const ChartPtr& chart, int j) {
  if (!chart || j < 0 || j >= chart->size()) throw Error("variable index out of range");
  Exps e(chart->size(), 0);
  e[j] = 1;
  return monomial(chart, std::move(e), Scalar(1));
}

Poly Poly::monomial(ChartPtr chart, Exps e, Scalar c) {
  if (!chart) throw Error("monomial needs a chart");
  if (static_cast<int>(e.size()) != chart->size()) throw Error("exponent vector size mismatch");
  for (int x : e)
    if (x < 0) throw Error("negative exponent");
  Poly p(std::move(chart));
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

Scalar Poly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Scalar(0) : it->second;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && exps_total(terms_.begin()->first) == 0;
}

Scalar Poly::constant_value() const {
  if (terms_.empty()) return Scalar(0);
  if (!is_constant()) throw Error("polynomial is not constant: " + str());
  return terms_.begin()->second;
}

void Poly::require_chart(const Poly& o) {
  if (!chart_) {
    chart_ = o.chart_;
    return;
  }
  if (o.chart_ && o.chart_ != chart_) throw ChartMismatchError("operands on different charts");
}

void Poly::add_term(const Exps& e, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(chart_);
  for (auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  require_chart(o);
  for (auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_chart(o);
  for (auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.chart_ ? a.chart_ : b.chart_);
  if (a.chart_ && b.chart_ && a.chart_ != b.chart_)
    throw ChartMismatchError("operands on different charts");
  for (auto& [ea, ca] : a.terms_)
    for (auto& [eb, cb] : b.terms_) {
      Exps e = ea;
      for (size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly operator*(const Scalar& c, Poly p) {
  if (c.is_zero()) return Poly(p.chart_);
  for (auto& [e, v] : p.terms_) v *= c;
  return p;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.chart_ && b.chart_ && a.chart_ != b.chart_ && !a.terms_.empty()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || ia->second != ib->second) return false;
  return true;
}

Poly Poly::pow(int k) const {
  if (k < 0) throw Error("negative power");
  if (!chart_) {
    if (k == 0) throw Error("0^0 of chartless zero");
    return Poly();
  }
  Poly r = Poly::constant(chart_, Scalar(1));
  for (int t = 0; t < k; ++t) r = r * *this;
  return r;
}

Poly Poly::pderiv(int j) const {
  if (!chart_) return Poly();
  if (j < 0 || j >= chart_->size()) throw Error("derivative index out of range");
  Poly r(chart_);
  for (auto& [e, c] : terms_) {
    if (e[j] == 0) continue;
    Exps d = e;
    d[j] -= 1;
    r.add_term(d, Scalar(Rational(e[j])) * c);
  }
  return r;
}

Poly Poly::conjugate() const {
  if (!chart_) return Poly();
  Poly r(chart_);
  for (auto& [e, c] : terms_) {
    Exps d(e.size(), 0);
    for (size_t j = 0; j < e.size(); ++j) d[chart_->conj(static_cast<int>(j))] = e[j];
    r.add_term(d, c.conj());
  }
  return r;
}

Scalar Poly::eval(const std::vector<Scalar>& point) const {
  if (chart_ && static_cast<int>(point.size()) != chart_->size())
    throw Error("evaluation point size mismatch");
  Scalar total(0);
  for (auto& [e, c] : terms_) {
    Scalar v = c;
    for (size_t j = 0; j < e.size(); ++j)
      for (int t = 0; t < e[j]; ++t) v *= point[j];
    total += v;
  }
  return total;
}

int Poly::mono_weight(const Exps& e) const {
  int w = 0;
  for (size_t j = 0; j < e.size(); ++j) w += e[j] * chart_->weight(static_cast<int>(j));
  return w;
}

std::optional<int> Poly::homogeneous_weight() const {
  if (terms_.empty()) return 0;
  int w = mono_weight(terms_.begin()->first);
  for (auto& [e, c] : terms_)
    if (mono_weight(e) != w) return std::nullopt;
  return w;
}

bool Poly::is_homogeneous_of(int w) const {
  if (terms_.empty()) return true;
  auto h = homogeneous_weight();
  return h && *h == w;
}

std::vector<std::pair<int, Poly>> Poly::homog_components() const {
  std::map<int, Poly, std::greater<int>> buckets;
  for (auto& [e, c] : terms_) {
    auto [it, fresh] = buckets.emplace(mono_weight(e), Poly(chart_));
    it->second.add_term(e, c);
  }
  std::vector<std::pair<int, Poly>> out;
  for (auto& [w, p] : buckets) out.emplace_back(w, std::move(p));
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [e, c] : terms_) {
    Scalar cc = c;
    bool neg = false;
    if (cc.is_real() && cc.re() < 0) {
      neg = true;
      cc = -cc;
    } else if (cc.re() == 0 && cc.im() < 0) {
      neg = true;
      cc = -cc;
    }
    std::string mono;
    for (size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += chart_->name(static_cast<int>(j));
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    std::string body;
    if (mono.empty()) {
      std::string cs = cc.str();
      bool mixed = cc.re() != 0 && cc.im() != 0;
      body = mixed ? "(" + cs + ")" : cs;
    } else if (cc.is_one()) {
      body = mono;
    } else if (cc.re() != 0 && cc.im() != 0) {
      body = "(" + cc.str() + ")*" + mono;
    } else {
      body = cc.str() + "*" + mono;
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

namespace {

struct Lexer {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  int col() const { return static_cast<int>(pos) + 1; }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, 1, col()); }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }
  Int number() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected number");
    return Int(std::string(s.substr(start, pos - start)));
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected identifier");
    return std::string(s.substr(start, pos - start));
  }
};

struct PolyParser {
  Lexer lex;
  const ChartPtr& chart;

  Poly parse_poly() {
    Poly acc(chart);
    bool neg = false;
    char c = lex.peek();
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++lex.pos;
    }
    acc += signed_term(neg);
    while (!lex.eof()) {
      char op = lex.peek();
      if (op != '+' && op != '-') break;
      ++lex.pos;
      acc += signed_term(op == '-');
    }
    return acc;
  }

  Poly signed_term(bool neg) {
    Poly t = parse_term();
    return neg ? -t : t;
  }

  Poly parse_term() {
    Poly t = parse_factor();
    while (lex.peek() == '*') {
      ++lex.pos;
      t = t * parse_factor();
    }
    return t;
  }

  Poly parse_factor() {
    Poly base = parse_base();
    if (lex.peek() == '^') {
      ++lex.pos;
      Int n = lex.number();
      if (n < 0 || n > 64) lex.fail("unsupported exponent");
      base = base.pow(static_cast<int>(n));
    }
    return base;
  }

  Poly parse_base() {
    char c = lex.peek();
    if (c == '(') {
      ++lex.pos;
      Poly inner = parse_poly();
      lex.expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = lex.number();
      Int den(1);
      if (lex.peek() == '/') {
        ++lex.pos;
        den = lex.number();
        if (den == 0) lex.fail("zero denominator");
      }
      return Poly::constant(chart, Scalar(Rational(num, den)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      int col = lex.col();
      std::string id = lex.ident();
      int j = chart->index_of(id);
      if (j >= 0) return Poly::variable(chart, j);
      if (id == "i") return Poly::constant(chart, Scalar::i());
      throw ParseError("unknown variable '" + id + "'", 1, col);
    }
    lex.fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

Poly Poly::parse(const ChartPtr& chart, std::string_view text) {
  if (!chart) throw Error("parse needs a chart");
  PolyParser p{Lexer{text}, chart};
  if (p.lex.eof()) throw ParseError("empty polynomial", 1, 1);
  Poly result = p.parse_poly();
  if (!p.lex.eof()) p.lex.fail("trailing input");
  return result;
}

std::optional<Poly> exact_divide(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error("division by zero polynomial");
  Poly rem = num;
  Poly quot(num.chart() ? num.chart() : den.chart());
  const auto& dlead = *den.terms().begin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms().begin();
    Exps q(rlead.first.size(), 0);
    for (size_t j = 0; j < q.size(); ++j) {
      q[j] = rlead.first[j] - dlead.first[j];
      if (q[j] < 0) return std::nullopt;
    }
    Scalar qc = rlead.second / dlead.second;
    Poly qm = Poly::monomial(rem.chart(), std::move(q), qc);
    quot += qm;
    rem -= qm * den;
  }
  return quot;
}

}  // namespace lalg
