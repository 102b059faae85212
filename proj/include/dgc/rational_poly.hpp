#pragma once

#include <string>
#include <vector>

#include "dgc/bigint.hpp"

namespace dgc {

/// Exact rational number over BigInt; denominator positive, always reduced.
class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long v) : num_(v), den_(1) {}
  Rat(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Rat operator+(const Rat&) const;
  Rat operator-(const Rat&) const;
  Rat operator*(const Rat&) const;
  Rat operator/(const Rat&) const;
  Rat negated() const;

  bool operator==(const Rat&) const = default;

  std::string str() const;

 private:
  BigInt num_, den_;
};

/// Univariate polynomial over Rat, coefficients ascending, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs);
  static Poly constant(Rat c);
  static Poly x();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat coeff(int i) const;
  Rat leading() const;

  Poly operator+(const Poly&) const;
  Poly operator-(const Poly&) const;
  Poly operator*(const Poly&) const;
  Poly scaled(const Rat&) const;
  /// Exact division with remainder over the rationals.
  std::pair<Poly, Poly> divmod(const Poly&) const;
  Poly operator/(const Poly&) const;  // throws unless remainder zero

  Poly derivative() const;
  Poly monic() const;
  /// p(x + c)
  Poly shift(const Rat& c) const;

  bool operator==(const Poly&) const = default;

  std::string str() const;

 private:
  std::vector<Rat> coeffs_;
  void trim();
};

/// Monic gcd by the Euclidean algorithm over Q[x].
Poly poly_gcd(Poly a, Poly b);

/// Yun square-free decomposition: p = prod f_i^i with the f_i square-free
/// and pairwise coprime; returned as (f_i, i) with deg f_i > 0.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

/// Root multiplicities over the algebraic closure: deg(f_i) copies of i.
std::vector<int> root_multiplicities(const Poly& p);

}  // namespace dgc
