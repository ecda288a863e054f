#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace chevalg {

/// A small finite field F_q, q = p^m with p prime and q <= 625.
///
/// Elements are handles (indices 0..q-1) whose base-p digits are the
/// coefficients of the polynomial representation modulo a fixed monic
/// irreducible. Instances are canonical and immutable: obtain them through
/// GaloisField::get(p, m) and share freely across threads.
class GaloisField {
 public:
  using Elem = std::uint16_t;

  static const GaloisField& get(int p, int m = 1);

  int p() const { return p_; }
  int m() const { return m_; }
  int q() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
  Elem inv(Elem a) const;
  Elem pow(Elem a, long long e) const;

  /// Embeds an integer through the prime subfield.
  Elem from_int(long long v) const;

  /// A fixed generator of the multiplicative group.
  Elem generator() const { return gen_; }

  /// The unique p-th root (inverse of Frobenius; F_q is perfect).
  Elem pth_root(Elem a) const;

  /// Digits of the polynomial representation, lowest degree first.
  std::vector<int> digits(Elem a) const;

  /// Renders an element over the generator symbol, e.g. "w+1" in F_4.
  std::string to_string(Elem a) const;

  bool operator==(const GaloisField& o) const { return this == &o; }

 private:
  GaloisField(int p, int m);
  std::size_t idx(Elem a, Elem b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  int p_, m_, q_;
  std::vector<int> irreducible_;  // monic, coefficients low to high
  std::vector<Elem> add_, mul_, neg_, inv_tab_;
  Elem gen_;
};

}  // namespace chevalg
