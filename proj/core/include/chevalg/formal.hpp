#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "chevalg/ratfunc.hpp"

namespace chevalg {

/// Process-wide registry of formal variable names (x10, x21, ...).
/// Identifiers are stable small integers; registration is idempotent.
class FormalVars {
 public:
  static int id(const std::string& name);
  static const std::string& name(int id);
};

/// Exponent vector of a monomial: sorted (variable, exponent>0) pairs.
struct Monomial {
  std::vector<std::pair<int, int>> factors;

  static Monomial one() { return {}; }
  static Monomial var(int id, int exp = 1);
  Monomial operator*(const Monomial& o) const;
  int degree_in(int var) const;
  int total_degree() const;
  bool operator<(const Monomial& o) const { return factors < o.factors; }
  bool operator==(const Monomial& o) const { return factors == o.factors; }
  std::string to_string() const;
};

/// Sparse multivariate polynomial in formal unknowns with coefficients in
/// K = F_q(t). Words carry these as root-element parameters, so conjugation
/// and collection stay exact in the presence of symbolic unknowns.
class FormalPoly {
 public:
  explicit FormalPoly(const GaloisField& f) : f_(&f) {}

  static FormalPoly constant(RatFunc c);
  static FormalPoly from_int(const GaloisField& f, long long v);
  static FormalPoly variable(const GaloisField& f, int var_id);
  static FormalPoly variable(const GaloisField& f, const std::string& name);

  const GaloisField& field() const { return *f_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  RatFunc constant_value() const;  // requires is_constant()
  const std::map<Monomial, RatFunc>& terms() const { return terms_; }
  RatFunc coeff(const Monomial& m) const;
  std::set<int> vars() const;
  int degree_in(int var) const;
  int total_degree() const;

  FormalPoly operator+(const FormalPoly& o) const;
  FormalPoly operator-(const FormalPoly& o) const;
  FormalPoly operator-() const;
  FormalPoly operator*(const FormalPoly& o) const;
  FormalPoly operator*(const RatFunc& c) const;
  FormalPoly pow(int e) const;
  bool operator==(const FormalPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const FormalPoly& o) const { return !(*this == o); }

  /// Substitutes a polynomial for a variable.
  FormalPoly subst(int var, const FormalPoly& value) const;
  /// Evaluates with every variable assigned; unassigned variables are an error.
  RatFunc eval(const std::map<int, RatFunc>& assign) const;

  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const RatFunc& c);
  const GaloisField* f_;
  std::map<Monomial, RatFunc> terms_;
};

}  // namespace chevalg
