#pragma once

#include <string>
#include <vector>

#include "dgc/dessin.hpp"
#include "dgc/rational_poly.hpp"

namespace dgc {

/// Rational function with exact rational coefficients, numerator and
/// denominator coprime, denominator monic.
class RationalMap {
 public:
  RationalMap(Poly numerator, Poly denominator);

  /// Parses "-(1/64)*(x-1)^3*(x+3)^2 / x^3" style expressions: rational
  /// constants, x, + - * / ^, parentheses.
  static RationalMap parse(std::string_view text);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  int degree() const;

  RationalMap operator+(const RationalMap&) const;
  RationalMap operator-(const RationalMap&) const;
  RationalMap operator*(const RationalMap&) const;
  RationalMap operator/(const RationalMap&) const;
  RationalMap pow(int k) const;

  /// Substitution x -> x + c.
  RationalMap shifted(const Rat& c) const;

  std::string str() const;

 private:
  Poly num_, den_;
};

/// Fibre data over 0, 1 and infinity, with the Belyi consistency flags.
struct BelyiPassport {
  std::vector<int> over0, over1, overinf;  // multiplicities, sorted descending
  bool sums_match_degree = false;
  bool critical_values_confined = false;  // no critical values outside {0,1,inf}
  int degree = 0;

  bool all_pass() const { return sums_match_degree && critical_values_confined; }
};

/// Multiplicity multisets of the three special fibres, by exact repeated-gcd
/// square-free decomposition (the point at infinity contributes the degree
/// deficiency of its fibre). Throws on constant maps.
BelyiPassport passport_of(const RationalMap& f);

/// True when the three fibre multisets equal the dessin's passport in
/// black/white/face order.
bool matches_dessin(const RationalMap& f, const Dessin& d);

}  // namespace dgc
