#pragma once

#include <stdexcept>
#include <vector>

namespace sepinv {

// Small finite field GF(q), q <= 9, with precomputed tables. Elements are
// indices 0..q-1; for prime powers the index encodes the polynomial residue
// in base p (GF(4) = GF(2)[t]/(t^2+t+1), GF(8) = GF(2)[t]/(t^3+t+1),
// GF(9) = GF(3)[t]/(t^2+1)), so in GF(4) the element t (a primitive cube
// root of unity) has index 2.
class Gf {
 public:
  explicit Gf(int q);

  int size() const { return q_; }
  int characteristic() const { return p_; }
  int add(int a, int b) const { return add_[a * q_ + b]; }
  int mul(int a, int b) const { return mul_[a * q_ + b]; }
  int neg(int a) const { return neg_[a]; }
  int inv(int a) const {
    if (a == 0) throw std::domain_error("Gf: inverse of zero");
    return inv_[a];
  }
  int pow(int a, unsigned e) const {
    int r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  // Multiplicative order of a non-zero element.
  int element_order(int a) const;

 private:
  int q_ = 0, p_ = 0, k_ = 0;
  std::vector<int> add_, mul_, neg_, inv_;
};

}  // namespace sepinv
