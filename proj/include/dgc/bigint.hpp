#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dgc {

/// Arbitrary-precision signed integer, sign-magnitude over 32-bit limbs.
/// Sized for exact polynomial arithmetic on small inputs, not for speed.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);
  static BigInt from_string(std::string_view text);

  bool is_zero() const { return limbs_.empty(); }
  int sign() const { return sign_; }
  BigInt negated() const;
  BigInt abs() const;

  BigInt operator+(const BigInt&) const;
  BigInt operator-(const BigInt&) const;
  BigInt operator*(const BigInt&) const;
  /// Truncated toward zero.
  BigInt operator/(const BigInt&) const;
  BigInt operator%(const BigInt&) const;

  static BigInt gcd(BigInt a, BigInt b);  // non-negative

  std::strong_ordering operator<=>(const BigInt&) const;
  bool operator==(const BigInt&) const = default;

  std::string str() const;
  /// Value as long long; throws when out of range.
  long long to_ll() const;

 private:
  int sign_ = 0;                      // -1, 0, +1; zero has empty limbs
  std::vector<std::uint32_t> limbs_;  // little-endian, no leading zeros

  static int cmp_mag(const std::vector<std::uint32_t>&, const std::vector<std::uint32_t>&);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>&,
                                            const std::vector<std::uint32_t>&);
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>&,
                                            const std::vector<std::uint32_t>&);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>&,
                                            const std::vector<std::uint32_t>&);
  static void divmod_mag(const std::vector<std::uint32_t>& a,
                         const std::vector<std::uint32_t>& b,
                         std::vector<std::uint32_t>& quot, std::vector<std::uint32_t>& rem);
  static void trim(std::vector<std::uint32_t>&);
  static BigInt make(int sign, std::vector<std::uint32_t> limbs);
};

}  // namespace dgc
