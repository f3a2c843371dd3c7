#include "sepinv/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace sepinv {

namespace {

using Limbs = std::vector<std::uint32_t>;

constexpr std::uint64_t kBase = 1ull << 32;

std::uint64_t to_u64(const Limbs& m) {
  std::uint64_t v = 0;
  if (!m.empty()) v = m[0];
  if (m.size() > 1) v |= static_cast<std::uint64_t>(m[1]) << 32;
  return v;
}

Limbs from_u64(std::uint64_t v) {
  Limbs m;
  if (v) m.push_back(static_cast<std::uint32_t>(v));
  if (v >> 32) m.push_back(static_cast<std::uint32_t>(v >> 32));
  return m;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

BigInt::BigInt(long long v) {
  negative_ = v < 0;
  // Avoid overflow on LLONG_MIN.
  std::uint64_t u = negative_ ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
  mag_ = from_u64(u);
}

void BigInt::trim() {
  while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
  if (mag_.empty()) negative_ = false;
}

bool BigInt::fits_int64() const {
  if (mag_.size() > 2) return false;
  std::uint64_t u = to_u64(mag_);
  if (negative_) return u <= (1ull << 63);
  return u < (1ull << 63);
}

long long BigInt::to_int64() const {
  std::uint64_t u = to_u64(mag_);
  if (negative_) return static_cast<long long>(~u + 1);
  return static_cast<long long>(u);
}

BigInt BigInt::operator-() const {
  BigInt r = *this;
  if (!r.mag_.empty()) r.negative_ = !r.negative_;
  return r;
}

BigInt BigInt::abs() const {
  BigInt r = *this;
  r.negative_ = false;
  return r;
}

int BigInt::cmp_mag(const Limbs& a, const Limbs& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

Limbs BigInt::add_mag(const Limbs& a, const Limbs& b) {
  const Limbs& x = a.size() >= b.size() ? a : b;
  const Limbs& y = a.size() >= b.size() ? b : a;
  Limbs r(x.size() + 1, 0);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::uint64_t s = carry + x[i] + (i < y.size() ? y[i] : 0);
    r[i] = static_cast<std::uint32_t>(s);
    carry = s >> 32;
  }
  r[x.size()] = static_cast<std::uint32_t>(carry);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Requires a >= b.
Limbs BigInt::sub_mag(const Limbs& a, const Limbs& b) {
  Limbs r(a.size(), 0);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
    if (d < 0) {
      d += static_cast<std::int64_t>(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    r[i] = static_cast<std::uint32_t>(d);
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

Limbs BigInt::mul_mag(const Limbs& a, const Limbs& b) {
  if (a.empty() || b.empty()) return {};
  if (a.size() <= 2 && b.size() <= 2) {
    unsigned __int128 p = static_cast<unsigned __int128>(to_u64(a)) * to_u64(b);
    Limbs r;
    while (p) {
      r.push_back(static_cast<std::uint32_t>(p));
      p >>= 32;
    }
    return r;
  }
  Limbs r(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::uint64_t cur = r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j] + carry;
      r[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    std::size_t k = i + b.size();
    while (carry) {
      std::uint64_t cur = r[k] + carry;
      r[k] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// Knuth algorithm D on uint32 limbs.
void BigInt::divmod_mag(const Limbs& u_in, const Limbs& v_in, Limbs& q, Limbs& r) {
  if (v_in.empty()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(u_in, v_in) < 0) {
    q.clear();
    r = u_in;
    return;
  }
  if (v_in.size() == 1) {
    std::uint64_t d = v_in[0];
    q.assign(u_in.size(), 0);
    std::uint64_t rem = 0;
    for (std::size_t i = u_in.size(); i-- > 0;) {
      std::uint64_t cur = (rem << 32) | u_in[i];
      q[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r = from_u64(rem);
    return;
  }

  const std::size_t n = v_in.size();
  const std::size_t m = u_in.size() - n;

  // Normalize so the divisor's top limb has its high bit set.
  int s = 0;
  for (std::uint32_t top = v_in.back(); !(top & 0x80000000u); top <<= 1) ++s;
  Limbs v(n), un(u_in.size() + 1, 0);
  for (std::size_t i = n; i-- > 0;) {
    v[i] = (v_in[i] << s);
    if (s && i > 0) v[i] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(v_in[i - 1]) >> (32 - s));
  }
  un[u_in.size()] = s ? static_cast<std::uint32_t>(static_cast<std::uint64_t>(u_in.back()) >> (32 - s)) : 0;
  for (std::size_t i = u_in.size(); i-- > 0;) {
    un[i] = (u_in[i] << s);
    if (s && i > 0) un[i] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(u_in[i - 1]) >> (32 - s));
  }

  q.assign(m + 1, 0);
  for (std::size_t j = m + 1; j-- > 0;) {
    std::uint64_t num = (static_cast<std::uint64_t>(un[j + n]) << 32) | un[j + n - 1];
    std::uint64_t qhat = num / v[n - 1];
    std::uint64_t rhat = num % v[n - 1];
    while (qhat >= kBase ||
           qhat * v[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += v[n - 1];
      if (rhat >= kBase) break;
    }
    // Multiply and subtract.
    std::int64_t borrow = 0;
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t p = qhat * v[i] + carry;
      carry = p >> 32;
      std::int64_t t = static_cast<std::int64_t>(un[i + j]) - borrow - static_cast<std::int64_t>(p & 0xffffffffu);
      if (t < 0) {
        t += static_cast<std::int64_t>(kBase);
        borrow = 1;
      } else {
        borrow = 0;
      }
      un[i + j] = static_cast<std::uint32_t>(t);
    }
    std::int64_t t = static_cast<std::int64_t>(un[j + n]) - borrow - static_cast<std::int64_t>(carry);
    if (t < 0) {
      // qhat was one too large: add back.
      t += static_cast<std::int64_t>(kBase);
      --qhat;
      std::uint64_t c2 = 0;
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t sum = static_cast<std::uint64_t>(un[i + j]) + v[i] + c2;
        un[i + j] = static_cast<std::uint32_t>(sum);
        c2 = sum >> 32;
      }
      t += static_cast<std::int64_t>(c2);
      t &= 0xffffffff;
    }
    un[j + n] = static_cast<std::uint32_t>(t);
    q[j] = static_cast<std::uint32_t>(qhat);
  }
  while (!q.empty() && q.back() == 0) q.pop_back();

  r.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (un[i] >> s);
    if (s && i + 1 < un.size()) r[i] |= static_cast<std::uint32_t>(static_cast<std::uint64_t>(un[i + 1]) << (32 - s));
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt r;
  if (a.negative_ == b.negative_) {
    r.negative_ = a.negative_;
    r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
  } else {
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt();
    if (c > 0) {
      r.negative_ = a.negative_;
      r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
      r.negative_ = b.negative_;
      r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
  }
  r.trim();
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
  r.negative_ = !r.mag_.empty() && (a.negative_ != b.negative_);
  return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  Limbs qm, rm;
  divmod_mag(a.mag_, b.mag_, qm, rm);
  q.mag_ = std::move(qm);
  r.mag_ = std::move(rm);
  q.negative_ = !q.mag_.empty() && (a.negative_ != b.negative_);
  r.negative_ = !r.mag_.empty() && a.negative_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  return r;
}

BigInt BigInt::divexact(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw std::domain_error("BigInt::divexact: inexact division");
  return q;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  if (a.mag_.size() <= 2 && b.mag_.size() <= 2) {
    BigInt r;
    r.mag_ = from_u64(gcd_u64(to_u64(a.mag_), to_u64(b.mag_)));
    return r;
  }
  // Binary gcd on magnitudes; avoids multi-limb division in the hot path.
  Limbs x = a.mag_, y = b.mag_;
  auto trailing_zero_bits = [](const Limbs& m) {
    int bits = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) {
        bits += 32;
      } else {
        bits += __builtin_ctz(m[i]);
        break;
      }
    }
    return bits;
  };
  auto shr = [](Limbs& m, int bits) {
    int words = bits / 32, rem = bits % 32;
    if (words) m.erase(m.begin(), m.begin() + std::min<std::size_t>(words, m.size()));
    if (rem && !m.empty()) {
      for (std::size_t i = 0; i + 1 < m.size(); ++i)
        m[i] = (m[i] >> rem) | static_cast<std::uint32_t>(static_cast<std::uint64_t>(m[i + 1]) << (32 - rem));
      m.back() >>= rem;
    }
    while (!m.empty() && m.back() == 0) m.pop_back();
  };
  int zx = trailing_zero_bits(x), zy = trailing_zero_bits(y);
  int common = std::min(zx, zy);
  shr(x, zx);
  shr(y, zy);
  while (true) {
    if (x.size() <= 2 && y.size() <= 2) {
      BigInt r;
      std::uint64_t g = gcd_u64(to_u64(x), to_u64(y));
      r.mag_ = from_u64(g);
      // Restore the common power of two.
      Limbs shifted = r.mag_;
      for (int i = 0; i < common; ++i) shifted = add_mag(shifted, shifted);
      r.mag_ = shifted;
      return r;
    }
    int c = cmp_mag(x, y);
    if (c == 0) break;
    if (c > 0) {
      x = sub_mag(x, y);
      shr(x, trailing_zero_bits(x));
    } else {
      y = sub_mag(y, x);
      shr(y, trailing_zero_bits(y));
    }
    if (x.empty()) {
      x = y;
      break;
    }
    if (y.empty()) break;
  }
  BigInt r;
  r.mag_ = x;
  for (int i = 0; i < common; ++i) r.mag_ = add_mag(r.mag_, r.mag_);
  return r;
}

int BigInt::compare(const BigInt& o) const {
  if (negative_ != o.negative_) return negative_ ? -1 : 1;
  int c = cmp_mag(mag_, o.mag_);
  return negative_ ? -c : c;
}

std::string BigInt::to_string() const {
  if (mag_.empty()) return "0";
  Limbs cur = mag_;
  std::string digits;
  Limbs billion = {1000000000u};
  while (!cur.empty()) {
    Limbs q, r;
    divmod_mag(cur, billion, q, r);
    std::uint32_t chunk = r.empty() ? 0 : r[0];
    for (int i = 0; i < 9; ++i) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
    cur = q;
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  if (negative_) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

BigInt BigInt::from_string(const std::string& s) {
  std::size_t pos = 0;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  BigInt r;
  for (; pos < s.size(); ++pos) {
    if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
    r = r * BigInt(10) + BigInt(s[pos] - '0');
  }
  if (neg) r = -r;
  return r;
}

}  // namespace sepinv
