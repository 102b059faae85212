#include "dgc/belyi.hpp"

#include <cctype>
#include <stdexcept>

namespace dgc {

RationalMap::RationalMap(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  Rat lc = den_.leading();
  num_ = num_.scaled(Rat(1) / lc);
  den_ = den_.scaled(Rat(1) / lc);
}

int RationalMap::degree() const { return std::max(num_.degree(), den_.degree()); }

RationalMap RationalMap::operator+(const RationalMap& r) const {
  return RationalMap(num_ * r.den_ + r.num_ * den_, den_ * r.den_);
}
RationalMap RationalMap::operator-(const RationalMap& r) const {
  return RationalMap(num_ * r.den_ - r.num_ * den_, den_ * r.den_);
}
RationalMap RationalMap::operator*(const RationalMap& r) const {
  return RationalMap(num_ * r.num_, den_ * r.den_);
}
RationalMap RationalMap::operator/(const RationalMap& r) const {
  if (r.num_.is_zero()) throw std::domain_error("division by zero");
  return RationalMap(num_ * r.den_, den_ * r.num_);
}

RationalMap RationalMap::pow(int k) const {
  RationalMap base = k < 0 ? RationalMap(den_, num_) : *this;
  int reps = k < 0 ? -k : k;
  RationalMap acc(Poly::constant(Rat(1)), Poly::constant(Rat(1)));
  for (int i = 0; i < reps; ++i) acc = acc * base;
  return acc;
}

RationalMap RationalMap::shifted(const Rat& c) const {
  return RationalMap(num_.shift(c), den_.shift(c));
}

std::string RationalMap::str() const {
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

namespace {

struct ExprParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument(what + " at position " + std::to_string(pos));
  }

  RationalMap parse_expr() {
    RationalMap acc = parse_term();
    while (!done() && (peek() == '+' || peek() == '-')) {
      char op = text[pos++];
      RationalMap rhs = parse_term();
      acc = op == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  RationalMap parse_term() {
    RationalMap acc = parse_factor();
    while (!done() && (peek() == '*' || peek() == '/')) {
      char op = text[pos++];
      RationalMap rhs = parse_factor();
      acc = op == '*' ? acc * rhs : acc / rhs;
    }
    return acc;
  }

  RationalMap parse_factor() {
    RationalMap base = parse_base();
    if (!done() && peek() == '^') {
      ++pos;
      skip_ws();
      bool neg = false;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
      }
      skip_ws();
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        fail("expected exponent");
      int e = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        e = e * 10 + (text[pos++] - '0');
        if (e > 1000) fail("exponent too large");
      }
      return base.pow(neg ? -e : e);
    }
    return base;
  }

  RationalMap parse_base() {
    if (done()) fail("unexpected end of input");
    char c = peek();
    if (c == '(') {
      ++pos;
      RationalMap inner = parse_expr();
      if (done() || peek() != ')') fail("expected ')'");
      ++pos;
      return inner;
    }
    if (c == '-') {
      ++pos;
      RationalMap inner = parse_factor();
      return RationalMap(Poly::constant(Rat(0)), Poly::constant(Rat(1))) - inner;
    }
    if (c == 'x') {
      ++pos;
      return RationalMap(Poly::x(), Poly::constant(Rat(1)));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        digits += text[pos++];
      return RationalMap(Poly::constant(Rat(BigInt::from_string(digits), BigInt(1))),
                         Poly::constant(Rat(1)));
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

std::vector<int> with_infinity(std::vector<int> mults, int deficiency) {
  if (deficiency > 0) mults.push_back(deficiency);
  std::sort(mults.rbegin(), mults.rend());
  return mults;
}

int sum_of(const std::vector<int>& v) {
  int s = 0;
  for (int x : v) s += x;
  return s;
}

// Strips every factor shared with s from w, repeatedly.
Poly strip_factors(Poly w, const Poly& s) {
  while (w.degree() > 0) {
    Poly g = poly_gcd(w, s);
    if (g.degree() == 0) break;
    w = w / g;
  }
  return w;
}

}  // namespace

RationalMap RationalMap::parse(std::string_view text) {
  ExprParser parser{text};
  RationalMap out = parser.parse_expr();
  if (!parser.done()) parser.fail("trailing input");
  return out;
}

BelyiPassport passport_of(const RationalMap& f) {
  const Poly& num = f.numerator();
  const Poly& den = f.denominator();
  int degree = f.degree();
  if (degree < 1) throw std::invalid_argument("constant map has no passport");

  BelyiPassport pp;
  pp.degree = degree;
  Poly num_minus_den = num - den;
  pp.over0 = with_infinity(root_multiplicities(num), degree - num.degree());
  pp.over1 = with_infinity(root_multiplicities(num_minus_den),
                           degree - num_minus_den.degree());
  pp.overinf = with_infinity(root_multiplicities(den), degree - den.degree());
  pp.sums_match_degree = sum_of(pp.over0) == degree && sum_of(pp.over1) == degree &&
                         sum_of(pp.overinf) == degree;

  // finite critical points: roots of W = num' den - num den' must lie in
  // one of the three special fibres
  Poly w = num.derivative() * den - num * den.derivative();
  w = strip_factors(w, num);
  w = strip_factors(w, num_minus_den);
  w = strip_factors(w, den);
  bool confined = w.degree() <= 0;
  // the source point at infinity: when deg num = deg den its value is
  // lc(num); ramification >= 2 over a value outside {0,1} violates the
  // confinement (values 0 and infinity cannot occur here, value 1 is
  // already part of the fibre-over-1 bookkeeping)
  if (num.degree() == den.degree()) {
    Rat c = num.leading();
    if (!(c == Rat(1))) {
      Poly shifted = num - den.scaled(c);
      int ram = degree - shifted.degree();
      if (ram >= 2) confined = false;
    }
  }
  pp.critical_values_confined = confined;
  return pp;
}

bool matches_dessin(const RationalMap& f, const Dessin& d) {
  BelyiPassport pp = passport_of(f);
  Passport dp = d.passport();
  return pp.over0 == dp.black && pp.over1 == dp.white && pp.overinf == dp.faces;
}

}  // namespace dgc
