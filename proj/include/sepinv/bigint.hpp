#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sepinv {

// Arbitrary-precision signed integer, base 2^32 little-endian magnitude.
// Sized for this library's workloads: coefficients in polynomial gcd chains
// grow to a few hundred bits; everything else stays within one limb.
class BigInt {
 public:
  BigInt() = default;
  BigInt(long long v);  // NOLINT: implicit by design, mirrors int literals

  static BigInt from_string(const std::string& s);
  std::string to_string() const;

  bool is_zero() const { return mag_.empty(); }
  bool is_negative() const { return negative_; }
  bool is_one() const { return !negative_ && mag_.size() == 1 && mag_[0] == 1; }

  // Fits in a signed 64-bit value?
  bool fits_int64() const;
  long long to_int64() const;  // requires fits_int64()

  BigInt operator-() const;
  BigInt abs() const;

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);

  // Truncated division (quotient rounds toward zero, remainder has the
  // sign of the dividend). b must be non-zero.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);

  // Exact division: asserts the remainder is zero.
  static BigInt divexact(const BigInt& a, const BigInt& b);

  static BigInt gcd(const BigInt& a, const BigInt& b);  // non-negative

  int compare(const BigInt& o) const;  // -1, 0, +1
  bool operator==(const BigInt& o) const { return compare(o) == 0; }
  bool operator!=(const BigInt& o) const { return compare(o) != 0; }
  bool operator<(const BigInt& o) const { return compare(o) < 0; }
  bool operator<=(const BigInt& o) const { return compare(o) <= 0; }
  bool operator>(const BigInt& o) const { return compare(o) > 0; }
  bool operator>=(const BigInt& o) const { return compare(o) >= 0; }

  BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
  BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
  BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

  std::size_t limb_count() const { return mag_.size(); }

 private:
  bool negative_ = false;
  std::vector<std::uint32_t> mag_;  // little-endian, no trailing zeros

  void trim();
  static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b);
  static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                         std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

}  // namespace sepinv
