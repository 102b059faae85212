#include "dgc/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace dgc {

void BigInt::trim(std::vector<std::uint32_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

BigInt BigInt::make(int sign, std::vector<std::uint32_t> limbs) {
  trim(limbs);
  BigInt out;
  out.limbs_ = std::move(limbs);
  out.sign_ = out.limbs_.empty() ? 0 : sign;
  return out;
}

BigInt::BigInt(long long v) {
  if (v == 0) return;
  sign_ = v < 0 ? -1 : 1;
  unsigned long long mag = v < 0 ? -static_cast<unsigned long long>(v) : v;
  while (mag) {
    limbs_.push_back(static_cast<std::uint32_t>(mag & 0xffffffffu));
    mag >>= 32;
  }
}

BigInt BigInt::from_string(std::string_view text) {
  std::size_t i = 0;
  int sign = 1;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') sign = -1;
    ++i;
  }
  if (i >= text.size()) throw std::invalid_argument("empty integer literal");
  BigInt out;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("bad digit");
    out = out * BigInt(10) + BigInt(text[i] - '0');
  }
  if (sign < 0) out = out.negated();
  return out;
}

BigInt BigInt::negated() const {
  BigInt out = *this;
  out.sign_ = -out.sign_;
  return out;
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.sign_ = out.limbs_.empty() ? 0 : 1;
  return out;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  std::vector<std::uint32_t> out;
  out.reserve(std::max(a.size(), b.size()) + 1);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::uint64_t sum = carry;
    if (i < a.size()) sum += a[i];
    if (i < b.size()) sum += b[i];
    out.push_back(static_cast<std::uint32_t>(sum & 0xffffffffu));
    carry = sum >> 32;
  }
  if (carry) out.push_back(static_cast<std::uint32_t>(carry));
  return out;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  // requires |a| >= |b|
  std::vector<std::uint32_t> out;
  out.reserve(a.size());
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(a[i]) - borrow -
                        (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
    if (diff < 0) {
      diff += std::int64_t{1} << 32;
      borrow = 1;
    } else {
      borrow = 0;
    }
    out.push_back(static_cast<std::uint32_t>(diff));
  }
  trim(out);
  return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint32_t> out(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      out[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = out[k] + carry;
      out[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
      carry = cur >> 32;
      ++k;
    }
  }
  trim(out);
  return out;
}

void BigInt::divmod_mag(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& quot, std::vector<std::uint32_t>& rem) {
  if (b.empty()) throw std::domain_error("division by zero");
  quot.assign(a.size(), 0);
  rem.clear();
  // bitwise long division, MSB first
  for (std::size_t limb = a.size(); limb-- > 0;) {
    for (int bit = 31; bit >= 0; --bit) {
      // rem = rem * 2 + next bit
      std::uint32_t carry = (a[limb] >> bit) & 1u;
      for (std::size_t i = 0; i < rem.size(); ++i) {
        std::uint32_t next = rem[i] >> 31;
        rem[i] = (rem[i] << 1) | carry;
        carry = next;
      }
      if (carry) rem.push_back(carry);
      if (cmp_mag(rem, b) >= 0) {
        rem = sub_mag(rem, b);
        quot[limb] |= 1u << bit;
      }
    }
  }
  trim(quot);
  trim(rem);
}

BigInt BigInt::operator+(const BigInt& rhs) const {
  if (is_zero()) return rhs;
  if (rhs.is_zero()) return *this;
  if (sign_ == rhs.sign_) return make(sign_, add_mag(limbs_, rhs.limbs_));
  int c = cmp_mag(limbs_, rhs.limbs_);
  if (c == 0) return BigInt();
  if (c > 0) return make(sign_, sub_mag(limbs_, rhs.limbs_));
  return make(rhs.sign_, sub_mag(rhs.limbs_, limbs_));
}

BigInt BigInt::operator-(const BigInt& rhs) const { return *this + rhs.negated(); }

BigInt BigInt::operator*(const BigInt& rhs) const {
  if (is_zero() || rhs.is_zero()) return BigInt();
  return make(sign_ * rhs.sign_, mul_mag(limbs_, rhs.limbs_));
}

BigInt BigInt::operator/(const BigInt& rhs) const {
  std::vector<std::uint32_t> q, r;
  divmod_mag(limbs_, rhs.limbs_, q, r);
  return make(sign_ * rhs.sign_, std::move(q));
}

BigInt BigInt::operator%(const BigInt& rhs) const {
  std::vector<std::uint32_t> q, r;
  divmod_mag(limbs_, rhs.limbs_, q, r);
  return make(sign_, std::move(r));
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a = a.abs();
  b = b.abs();
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::strong_ordering BigInt::operator<=>(const BigInt& rhs) const {
  if (sign_ != rhs.sign_) return sign_ <=> rhs.sign_;
  int c = cmp_mag(limbs_, rhs.limbs_);
  if (sign_ < 0) c = -c;
  return c <=> 0;
}

std::string BigInt::str() const {
  if (is_zero()) return "0";
  std::vector<std::uint32_t> mag = limbs_;
  std::string digits;
  while (!mag.empty()) {
    // divide by 10^9, collecting the remainder
    std::uint64_t rem = 0;
    for (std::size_t i = mag.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | mag[i];
      mag[i] = static_cast<std::uint32_t>(cur / 1000000000u);
      rem = cur % 1000000000u;
    }
    trim(mag);
    std::string chunk = std::to_string(rem);
    if (!mag.empty()) chunk.insert(chunk.begin(), 9 - chunk.size(), '0');
    digits = chunk + digits;
  }
  return (sign_ < 0 ? "-" : "") + digits;
}

long long BigInt::to_ll() const {
  if (limbs_.size() > 2) throw std::overflow_error("BigInt out of long long range");
  unsigned long long mag = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) mag = (mag << 32) | limbs_[i];
  if (sign_ >= 0) {
    if (mag > 0x7fffffffffffffffull) throw std::overflow_error("BigInt out of range");
    return static_cast<long long>(mag);
  }
  if (mag > 0x8000000000000000ull) throw std::overflow_error("BigInt out of range");
  return -static_cast<long long>(mag - 1) - 1;
}

}  // namespace dgc
