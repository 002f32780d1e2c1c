#include "lalg/scalar.hpp"

#include "lalg/errors.hpp"

namespace lalg {

std::string rational_str(const Rational& r) { return r.str(); }

Scalar Scalar::inverse() const {
  Rational n = norm();
  if (n == 0) throw Error("division by zero scalar");
  return Scalar(re_ / n, -im_ / n);
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  if (im_ == 0) return rational_str(re_);
  std::string imag;
  Rational a = im_ < 0 ? Rational(-im_) : im_;
  if (a == 1)
    imag = "i";
  else
    imag = rational_str(a) + "*i";
  if (re_ == 0) return (im_ < 0 ? "-" : "") + imag;
  return rational_str(re_) + (im_ < 0 ? "-" : "+") + imag;
}

namespace {

// rational := ['+'|'-'] digits ['/' digits]
Rational parse_rational(std::string_view s, size_t& pos) {
  size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  size_t d0 = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == d0) throw ParseError("expected number", 1, static_cast<int>(start) + 1);
  Int num(std::string(s.substr(d0, pos - d0)));
  Int den(1);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t d1 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d1) throw ParseError("expected denominator", 1, static_cast<int>(pos) + 1);
    den = Int(std::string(s.substr(d1, pos - d1)));
    if (den == 0) throw ParseError("zero denominator", 1, static_cast<int>(d1) + 1);
  }
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  // trim
  size_t b = text.find_first_not_of(" \t");
  size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos) throw ParseError("empty scalar", 1, 1);
  std::string_view s = text.substr(b, e - b + 1);

  size_t pos = 0;
  Rational parts[2] = {Rational(0), Rational(0)};
  int nparts = 0;
  while (pos < s.size()) {
    if (nparts >= 2) throw ParseError("too many terms in scalar", 1, static_cast<int>(pos) + 1);
    bool neg = false;
    if (s[pos] == '+' || s[pos] == '-') {
      neg = s[pos] == '-';
      ++pos;
    }
    Rational mag;
    bool imag = false;
    if (pos < s.size() && s[pos] == 'i') {
      mag = 1;
      imag = true;
      ++pos;
    } else {
      size_t save = pos;
      std::string_view rest = s.substr(pos);
      size_t rp = 0;
      mag = parse_rational(rest, rp);
      pos = save + rp;
      if (pos < s.size() && s[pos] == '*') {
        if (pos + 1 < s.size() && s[pos + 1] == 'i') {
          imag = true;
          pos += 2;
        } else {
          throw ParseError("expected i after *", 1, static_cast<int>(pos) + 2);
        }
      }
    }
    if (neg) mag = -mag;
    parts[imag ? 1 : 0] += mag;
    ++nparts;
  }
  if (nparts == 0) throw ParseError("empty scalar", 1, 1);
  return Scalar(parts[0], parts[1]);
}

}  // namespace lalg
