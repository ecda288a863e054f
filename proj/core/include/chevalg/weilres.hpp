#pragma once

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "chevalg/linalg.hpp"
#include "chevalg/ratfunc.hpp"

namespace chevalg {

/// Weil restriction of the multiplicative group along the purely inseparable
/// extension k' = k(theta), theta^{p^s} = a, realized as multiplication
/// matrices on the k-basis {1, theta, ..., theta^{n-1}}, n = p^s.
///
/// Coordinates: k = F_p(u) embedded in the computational field K = F_p(t)
/// via u = t^{p^s}, so a = t^{p^s} and theta = t. Membership in k is the
/// exponent-divisibility test in_k below.
class WeilRestriction {
 public:
  WeilRestriction(int p, int s);

  int p() const { return p_; }
  int s() const { return s_; }
  int degree() const { return n_; }
  const GaloisField& field() const { return *gf_; }
  /// a = theta^n as an element of K.
  const RatFunc& a() const { return a_; }

  /// True iff x lies in the base field k = F_p(t^n).
  bool in_k(const RatFunc& x) const;

  /// Multiplication by c = sum c_i theta^i; the c_i must be k-points.
  /// Ring homomorphism in c (additive and multiplicative).
  Mat<RatFunc> weil_matrix(const std::vector<RatFunc>& c) const;

  /// Product in k' = k[theta]/(theta^n - a) on coefficient vectors.
  std::vector<RatFunc> kprime_mul(const std::vector<RatFunc>& c,
                                  const std::vector<RatFunc>& d) const;

  /// Whether {weil_matrix(theta^i) v} spans k^n; v must be nonzero over k.
  /// Field theory forces this for every nonzero v (the two-orbit statement);
  /// the operation exists to check it mechanically.
  bool orbit_span_full(const std::vector<RatFunc>& v) const;

  enum class FieldMode { k, K };
  /// Common eigenvector of all multiplication matrices over the requested
  /// field; implemented for n = 2. Exists over K (the theta-eigenline) and
  /// is absent over k, the module-level shadow of reducibility appearing
  /// only after the inseparable extension.
  std::optional<std::vector<RatFunc>> common_eigenvector(FieldMode mode) const;

  static nlohmann::ordered_json matrix_json(const Mat<RatFunc>& m);

 private:
  int p_, s_, n_;
  const GaloisField* gf_;
  RatFunc a_;
};

}  // namespace chevalg
