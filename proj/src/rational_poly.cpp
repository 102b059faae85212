#include "dgc/rational_poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgc {

Rat::Rat(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  if (den_.sign() < 0) {
    num_ = num_.negated();
    den_ = den_.negated();
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_zero() && g != BigInt(1)) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  if (num_.is_zero()) den_ = BigInt(1);
}

Rat Rat::operator+(const Rat& r) const {
  return Rat(num_ * r.den_ + r.num_ * den_, den_ * r.den_);
}
Rat Rat::operator-(const Rat& r) const {
  return Rat(num_ * r.den_ - r.num_ * den_, den_ * r.den_);
}
Rat Rat::operator*(const Rat& r) const { return Rat(num_ * r.num_, den_ * r.den_); }
Rat Rat::operator/(const Rat& r) const {
  if (r.is_zero()) throw std::domain_error("division by zero");
  return Rat(num_ * r.den_, den_ * r.num_);
}
Rat Rat::negated() const {
  Rat out = *this;
  out.num_ = out.num_.negated();
  return out;
}

std::string Rat::str() const {
  if (den_ == BigInt(1)) return num_.str();
  return num_.str() + "/" + den_.str();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Rat c) { return Poly({std::move(c)}); }
Poly Poly::x() { return Poly({Rat(0), Rat(1)}); }

Rat Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[i];
}

Rat Poly::leading() const {
  if (is_zero()) return Rat(0);
  return coeffs_.back();
}

Poly Poly::operator+(const Poly& r) const {
  std::vector<Rat> out(std::max(coeffs_.size(), r.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = coeff(static_cast<int>(i)) + r.coeff(static_cast<int>(i));
  return Poly(std::move(out));
}

Poly Poly::operator-(const Poly& r) const {
  std::vector<Rat> out(std::max(coeffs_.size(), r.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = coeff(static_cast<int>(i)) - r.coeff(static_cast<int>(i));
  return Poly(std::move(out));
}

Poly Poly::operator*(const Poly& r) const {
  if (is_zero() || r.is_zero()) return Poly();
  std::vector<Rat> out(coeffs_.size() + r.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
      out[i + j] = out[i + j] + coeffs_[i] * r.coeffs_[j];
  return Poly(std::move(out));
}

Poly Poly::scaled(const Rat& c) const {
  std::vector<Rat> out = coeffs_;
  for (Rat& v : out) v = v * c;
  return Poly(std::move(out));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = *this;
  std::vector<Rat> quot(std::max(0, degree() - d.degree() + 1), Rat(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int shift = rem.degree() - d.degree();
    Rat factor = rem.leading() / d.leading();
    quot[shift] = quot[shift] + factor;
    std::vector<Rat> sub(shift, Rat(0));
    sub.insert(sub.end(), d.coeffs_.begin(), d.coeffs_.end());
    rem = rem - Poly(std::move(sub)).scaled(factor);
  }
  return {Poly(std::move(quot)), std::move(rem)};
}

Poly Poly::operator/(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> out(coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * Rat(static_cast<long long>(i));
  return Poly(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(Rat(1) / leading());
}

Poly Poly::shift(const Rat& c) const {
  // Horner: p(x + c)
  Poly out;
  Poly xc = Poly({c, Rat(1)});
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    out = out * xc + Poly::constant(coeffs_[i]);
  return out;
}

std::string Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + coeffs_[i].str() + ")";
    if (i == 1) out += "*x";
    if (i > 1) out += "*x^" + std::to_string(i);
  }
  return out;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> out;
  if (p.degree() <= 0) return out;
  // Yun's algorithm over characteristic zero
  Poly u = poly_gcd(p, p.derivative());
  Poly v = p / u;
  Poly w = p.derivative() / u;
  int i = 1;
  while (v.degree() > 0) {
    Poly h = w - v.derivative();
    Poly g = poly_gcd(v, h);
    if (g.degree() > 0) out.push_back({g.monic(), i});
    v = v / g;
    w = h / g;
    ++i;
  }
  return out;
}

std::vector<int> root_multiplicities(const Poly& p) {
  std::vector<int> out;
  for (const auto& [factor, mult] : squarefree_decomposition(p))
    for (int k = 0; k < factor.degree(); ++k) out.push_back(mult);
  std::sort(out.rbegin(), out.rend());
  return out;
}

}  // namespace dgc
