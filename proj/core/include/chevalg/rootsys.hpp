#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace chevalg {

/// A root, stored as its integer coefficient vector over the simple roots
/// together with its signed label in the ambient enumeration (+i for the
/// i-th positive root, -i for its negative).
struct Root {
  std::vector<int> coeffs;
  int label = 0;
};

/// A reduced finite root system built from Cartan data.
///
/// Instances are immutable after construction and safe to share across
/// threads. Roots are addressed by signed labels +-1..+-N. For F4 the
/// positive labels follow the fixed reference enumeration (the table used by
/// all scenario computations); every other type is enumerated by height and
/// then lexicographically on coefficient vectors.
class RootSystem {
 public:
  /// Builds from a type label: A1..A8, B2..B8, C3..C8, D4..D8, E6, E7, F4, G2.
  static RootSystem build(const std::string& type_label);
  /// Builds from an explicit Cartan matrix (rows index coroots:
  /// cartan[i][j] = <alpha_j, alpha_i^vee>). Rejects matrices that are not
  /// generalized Cartan of finite type with rank <= 8.
  static RootSystem build(const std::vector<std::vector<int>>& cartan);

  int rank() const { return static_cast<int>(cartan_.size()); }
  int num_positive() const { return static_cast<int>(roots_.size()) / 2; }
  int num_roots() const { return static_cast<int>(roots_.size()); }
  const std::string& type() const { return type_; }
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }

  const Root& root(int label) const;
  std::optional<int> label_of(const std::vector<int>& coeffs) const;
  /// Label of the sum when it is again a root.
  std::optional<int> sum(int a, int b) const;
  int height(int label) const;
  /// Signed label of the i-th simple root (0-based rank index).
  int simple_label(int i) const { return simple_labels_[i]; }

  /// Cartan pairing <zeta, xi^vee> = 2(zeta,xi)/(xi,xi).
  int pairing(int zeta, int xi) const;
  /// <zeta, alpha_i^vee> against the i-th simple coroot (0-based).
  int simple_pairing(int zeta, int i) const;
  /// Label of s_xi . zeta = zeta - <zeta, xi^vee> xi.
  int reflect(int xi, int zeta) const;

  /// Scaled W-invariant inner product (integer valued; only ratios matter).
  int ip(int a, int b) const;
  int len2(int a) const { return ip(a, a); }
  bool is_long(int label) const;
  /// Coefficients of xi^vee over the simple coroots.
  std::vector<int> coroot(int label) const;

  /// Cartan type of a subset closed under negation and internal reflection,
  /// e.g. "B3"; components of a reducible subset are joined with " x ".
  std::string subsystem_type(const std::set<int>& labels) const;

  /// Identifies a Cartan matrix up to simultaneous row/column permutation.
  static std::string cartan_type_label(const std::vector<std::vector<int>>& cartan);

  nlohmann::ordered_json to_json() const;

  struct detail;

 private:
  RootSystem() = default;
  void finalize(std::vector<std::vector<int>> positives);

  std::string type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> symm_;  // symmetrizer d_i: d_i * cartan[i][j] symmetric
  std::vector<Root> roots_;
  std::vector<int> simple_labels_;
  std::map<std::vector<int>, int> by_coeffs_;
};

/// Internal/test hooks.
struct RootSystem::detail {
  /// Builds with an explicit positive-root enumeration (used by negative
  /// controls to exercise table-divergence detection).
  static RootSystem build_with_enumeration(const std::vector<std::vector<int>>& cartan,
                                           const std::vector<std::vector<int>>& positives,
                                           const std::string& type_label);
};

}  // namespace chevalg
