#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chevalg/galois.hpp"

namespace chevalg {

/// Dense univariate polynomial over a GaloisField, in the indeterminate t.
/// Coefficients are stored lowest degree first and kept trimmed, so the zero
/// polynomial has an empty coefficient vector.
class Poly {
 public:
  explicit Poly(const GaloisField& f) : f_(&f) {}
  Poly(const GaloisField& f, std::vector<GaloisField::Elem> coeffs);

  static Poly constant(const GaloisField& f, GaloisField::Elem c);
  static Poly t(const GaloisField& f);

  const GaloisField& field() const { return *f_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  GaloisField::Elem coeff(int i) const;
  GaloisField::Elem leading() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  bool operator<(const Poly& o) const;  // by degree then coefficients

  /// Division with remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  static Poly gcd(Poly a, Poly b);  // monic gcd, gcd(0,0) = 0

  Poly monic() const;
  Poly scaled(GaloisField::Elem c) const;
  GaloisField::Elem eval(GaloisField::Elem x) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  const GaloisField* f_;
  std::vector<GaloisField::Elem> c_;
};

/// Exact rational function over F_q in t, kept in canonical form:
/// gcd(num, den) = 1, den monic, zero represented as 0/1.
///
/// This is the element type of K = F_q(t). In characteristic 2 the subfield
/// k = F_q(t^2) coincides with the set of squares of K, which drives the
/// is_k_point and sqrt_char2 queries below.
class RatFunc {
 public:
  explicit RatFunc(const GaloisField& f);
  RatFunc(Poly num, Poly den);

  static RatFunc from_int(const GaloisField& f, long long v);
  static RatFunc constant(const GaloisField& f, GaloisField::Elem c);
  static RatFunc t(const GaloisField& f);

  const GaloisField& field() const { return num_.field(); }
  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  GaloisField::Elem constant_value() const;

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inv() const;
  RatFunc pow(long long e) const;
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }
  bool operator<(const RatFunc& o) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void canonicalize();
  Poly num_, den_;
};

/// Decides membership in k = F_q(t^2) inside K = F_q(t) (characteristic 2
/// only). In canonical form this holds exactly when numerator and denominator
/// lie in F_q[t^2], i.e. when x is a square in K.
bool is_k_point(const RatFunc& x);

/// The unique square root in K = F_q(t), characteristic 2, when one exists.
/// Squaring is injective in characteristic 2, so the root is unique; absence
/// is a value, not an error.
std::optional<RatFunc> sqrt_char2(const RatFunc& x);

}  // namespace chevalg
